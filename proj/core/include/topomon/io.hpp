#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "topomon/classify.hpp"
#include "topomon/lts.hpp"
#include "topomon/monitor.hpp"
#include "topomon/reductions.hpp"
#include "topomon/symbolic.hpp"
#include "topomon/topology.hpp"

namespace topomon {

// ---------------------------------------------------------------------------
// Text formats. Blank lines and '#' comments are ignored everywhere; parse
// failures throw ParseError with the offending line and token.
// ---------------------------------------------------------------------------

/// `space <n>` followed by n lines `minopen <x>: <points>`. The parsed map is
/// also validated; a violated neighbourhood law is reported as a ParseError
/// naming the pair.
FiniteSpace parse_space(std::istream& in);
FiniteSpace parse_space(const std::string& text);

std::string print_space(const FiniteSpace& s);

/// Space-separated point indices, with an optional leading `set:`.
PointSet parse_point_list(const std::string& text, std::size_t n);

/// `lts <n> <comma-separated alphabet>` followed by lines `<q> <event> <q'>`.
TransitionSystem parse_lts(std::istream& in);
TransitionSystem parse_lts(const std::string& text);

using SymbolicSet = std::variant<CofiniteSet, GridSet, ScottSet, SumSet>;

/// One of:
///   cofinite pre=<bits> per=<bits>
///   grid default pre=<bits> per=<bits>   (then lines: col <m> pre=<bits> per=<bits>)
///   scott [inf] (node <seq> | cone <seq> | spine <seq> <k>)*
///   sum y=<k> bits=<b1><b2> part=<comma-separated indices>
/// where <seq> is dot-separated naturals or `eps`.
SymbolicSet parse_symbolic(std::istream& in);
SymbolicSet parse_symbolic(const std::string& text);

/// tree (node <seq>)* [spine <seq> <k>]
TreePresentation parse_tree(std::istream& in);
TreePresentation parse_tree(const std::string& text);

/// The induced space in the space format, prefixed with comment lines listing
/// the subbasis with its witness strings. Re-parses to the same space.
std::string induced_space_text(const TransitionSystem& t);

// ---------------------------------------------------------------------------
// JSON rendering (machine output; compact, stable field order).
// ---------------------------------------------------------------------------

std::string monitor_verdict_json(const MonitorVerdict& verdict,
                                 const std::optional<Decomposition>& decomposition);

/// kind is "cofinite", "grid", "scott" or "sum"; the witness column is
/// emitted for grids only.
std::string symbolic_verdict_json(const std::string& kind, bool monitorable,
                                  const std::optional<std::uint32_t>& witness_column);

std::string classify_json(const ComplexityVerdict& v);
std::string genericity_json(const GenericityReport& r);
std::string certification_json(const CertificationReport& r);
std::string hyperconnected_json(bool hyperconnected);

}  // namespace topomon
