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

// JSON interchange for decompositions, graphs, structures and certificates.

#ifndef IWG_IO_HPP_
#define IWG_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

#include "iwg/diagram.hpp"
#include "iwg/labeled_graph.hpp"
#include "iwg/ltt.hpp"
#include "iwg/nielsen.hpp"
#include "iwg/nielsen_paths.hpp"
#include "iwg/synthesis.hpp"

namespace iwg {

using Json = nlohmann::ordered_json;

// {"rank": 3, "generators": [{"x": "a-", "y": "b"}, ...], "origin": 0}
Json to_json(const Decomposition& d);
// Throws FormatError.  Generators may also be given as strings "a->ab-".
Decomposition decomposition_from_json(const Json& j);
Decomposition parse_decomposition(std::string_view text);

// {"rank": n, "vertices": [{"label", "color"}], "edges": [{"ends", "color"}]}
Json to_json(const ColoredPairLabeledGraph& g);
ColoredPairLabeledGraph graph_from_json(const Json& j);

Json to_json(const LttStructure& s);
LttStructure ltt_from_json(const Json& j);

Json to_json(const BranchTrace& b);
Json to_json(const SearchResult& r);
Json to_json(const PnpCertificate& c);
Json to_json(const LoopCertificate& c);
Json to_json(const IdDiagram& id);
Json to_json(const GlueResult& g);
Json to_json(const PipelineResult& p);

// Nodes labeled by red data, arrows by generator and move kind.
std::string to_dot(const IdDiagram& id, bool seed_component_only = true);

}  // namespace iwg

#endif  // IWG_IO_HPP_
