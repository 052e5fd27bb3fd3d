#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <string>
#include <vector>

#include "obstructionist/graph.hpp"
#include "obstructionist/iso.hpp"

namespace obstructionist::catalog {

class UnknownGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Values every catalog graph is checked against when verified.
struct Expected {
  std::optional<std::size_t> vertices;
  std::optional<std::size_t> edges;
  std::optional<std::size_t> b0;
  std::optional<std::size_t> b1;
  std::optional<std::size_t> girth;
  std::optional<std::size_t> edge_connectivity;
  std::optional<std::vector<std::string>> min_cut;  // edge names, sorted
  std::map<std::size_t, std::uint64_t> cycle_counts;
  std::optional<std::vector<std::size_t>> edge_orbit_sizes;  // sorted
  std::optional<bool> planar;
  std::optional<bool> projective;
  std::optional<bool> toroidal;
  std::optional<std::size_t> torus_embedding_classes;
};

struct CatalogEntry {
  std::string name;
  MultiGraph graph;
  std::string construction;  // how the graph is assembled from its labeled ingredients
  Expected expected;
};

/// Canonical names, in catalog order.
const std::vector<std::string>& names();
/// The eleven non-toroidal graphs of Betti number 8: H0..H9 and H0+e.
const std::vector<std::string>& non_toroidal_names();
/// Accepts the names above plus the aliases "H0∪e" and "K3,3". E42 and H0
/// are the same graph under its two roles.
CatalogEntry build(std::string_view name);
std::string canonical_name(std::string_view name);

/// Catalog name of the isomorphism class, preferring the non-toroidal names
/// when two names share a graph (H0 over E42).
std::optional<std::string> identify(const iso::CanonicalForm& form);
std::optional<std::string> identify(const MultiGraph& g);

/// Labeled edge-list text for a catalog graph.
std::string edge_list_text(std::string_view name);

struct FingerprintCheck {
  std::string property;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct FingerprintReport {
  std::string name;
  std::vector<FingerprintCheck> checks;
  bool ok() const;
};

/// Recomputes every expected value of the entry. Mismatches are report rows,
/// not exceptions.
FingerprintReport verify_fingerprints(const CatalogEntry& entry);

/// All isomorphism classes G1 ∪ (AA'−BB') ∪ e2 with girth >= 4, five
/// 4-cycles and no torus embedding. The H5 construction is accepted only when
/// this has exactly one member.
std::vector<MultiGraph> h5_fingerprint_matches();

}  // namespace obstructionist::catalog
