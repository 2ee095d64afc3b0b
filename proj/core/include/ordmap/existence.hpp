#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ordmap/group.hpp"
#include "ordmap/linear_map.hpp"
#include "ordmap/spectrum.hpp"

namespace ordmap {

// Bipartite graph between source and target order classes. An edge (d, e)
// means the mode's predicate holds between order d and order e, so order-d
// elements may legally map onto order-e elements.
struct ClassGraph {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> source_classes;  // (order, count), ascending
  std::vector<std::pair<std::uint64_t, std::uint64_t>> target_classes;  // (order, count), ascending
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;           // (d, e), lexicographic
};

ClassGraph build_class_graph(const OrderSpectrum& src, const OrderSpectrum& dst,
                             ComparisonMode mode);

// Outcome of the spectrum-matching feasibility question. Feasible
// certificates carry an integral class assignment (row sums = source
// counts, column sums = target counts, support only on edges); infeasible
// ones carry a Hall violator: source orders whose total element count
// exceeds the total count of all adjacent target classes.
struct ExistenceCertificate {
  bool feasible = false;
  ComparisonMode mode = ComparisonMode::Divides;
  std::uint64_t group_order = 0;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> assignment;
  std::vector<std::uint64_t> witness;  // Hall violator orders, ascending
};

// Decides feasibility by exact integral max-flow over the class graph,
// with classes processed in ascending order so certificates are
// deterministic. Feasible iff the flow saturates the whole group order.
ExistenceCertificate exists_bijection(const OrderSpectrum& src, const OrderSpectrum& dst,
                                      ComparisonMode mode);

struct PairingRow {
  Element source;
  std::uint64_t source_order;
  Element target;
  std::uint64_t target_order;
  bool predicate_holds;
};

// Element-level bijection expanded from a feasible certificate, rows in
// the source group's canonical enumeration order. Elements are consumed in
// canonical order within each order class.
struct PairingTable {
  GroupSpec src;
  GroupSpec dst;
  ComparisonMode mode;
  std::vector<PairingRow> rows;
  bool all_hold = false;
};

PairingTable realize_bijection(const GroupSpec& g, const GroupSpec& c,
                               const ExistenceCertificate& cert,
                               std::uint64_t bound = kDefaultEnumerationBound);

// Independent oracle: plain backtracking over class assignments.
// Semantics identical to exists_bijection's feasibility bit.
// Requires group order <= 64.
bool brute_force_exists(const OrderSpectrum& src, const OrderSpectrum& dst,
                        ComparisonMode mode);

}  // namespace ordmap
