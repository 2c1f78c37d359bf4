#pragma once

#include "gkm/graph.hpp"

#include <string>

namespace gkm {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Canonical interchange document: sorted keys, vertices sorted, edges in
/// canonical order, per-dart connection maps. Round-trips bit-for-bit.
std::string to_interchange(const GkmGraph& g);
std::string to_interchange(const TGraph& t);
/// Parses a graph document; recomputes the connection when it is omitted and
/// the labels determine it uniquely (GKM_3).
GkmGraph graph_from_interchange(const std::string& text);
/// Parses a document carrying a "beta" block.
TGraph tgraph_from_interchange(const std::string& text);

}  // namespace gkm
