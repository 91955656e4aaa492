#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "latcut/poset.hpp"

namespace latcut {

struct ParseResult {
    FinitePoset poset;
    bool normalized;  // input carried redundant (non-cover) edges
};

/// Parses the interchange document: {"n":int, "covers":[[a,b],...],
/// "labels":[...]?, "meta":{...}?}. Pairs are [lower, upper]. Redundant
/// pairs reduce away with `normalized` set. Throws SyntaxError on malformed
/// input plus the build_poset errors.
ParseResult parse_document(std::string_view text);

/// Canonical form: sorted covers, fields in order n, covers, labels.
/// parse(emit(p)).poset == p, byte-stable across runs.
std::string emit_document(const FinitePoset& p);

/// Graphviz Hasse diagram, bottom-up ranks. Level classes become rank
/// groups; each highlight set gets its own fill color.
std::string emit_dot(const FinitePoset& p,
                     const std::vector<std::vector<int>>& highlight = {},
                     bool rank_by_level = true);

}  // namespace latcut
