// Copyright 2026 The iwg Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IWG_ERROR_HPP_
#define IWG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace iwg {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A letter outside the 2r directions of the declared rank, or bad word syntax.
class InvalidLetter : public Error {
 public:
  using Error::Error;
};

class RankError : public Error {
 public:
  using Error::Error;
};

// An operation that needs a PNP-freeness certificate was handed none, or one
// issued for a different decomposition.
class MissingCertificate : public Error {
 public:
  using Error::Error;
};

class NotTrainTrack : public Error {
 public:
  using Error::Error;
};

// Malformed gluing input.
class SpecError : public Error {
 public:
  using Error::Error;
};

// Malformed interchange documents.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace iwg

#endif  // IWG_ERROR_HPP_
