#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "grasscode/bigint.hpp"
#include "grasscode/code.hpp"
#include "grasscode/subspace.hpp"

namespace grasscode {

/// The incidence structure whose vertices are the (k-delta)-subspaces of
/// F_q^n and whose hyperedges are the k-subspaces, an edge containing the
/// vertices it contains as subspaces. Maximum matchings are exactly the
/// optimal distance-2delta+2 codes. The vertex table is materialized with
/// lexicographic-rank ids; edges are unranked on demand, never stored as a
/// global expanded list.
class IncidenceIndex {
public:
    // Throws for delta in {0, k}: those hypergraphs are degenerate and the
    // optimal codes are trivial (the whole Grassmannian / any single
    // subspace); see trivial_optimal_code.
    IncidenceIndex(FieldPtr field, unsigned n, unsigned k, unsigned delta);

    const FieldPtr& field() const { return field_; }
    unsigned n() const { return n_; }
    unsigned k() const { return k_; }
    unsigned delta() const { return delta_; }
    unsigned vertex_dim() const { return vdim_; }

    std::uint64_t vertex_count() const { return vertices_.size(); }
    std::uint64_t edge_count() const { return edge_count_; }
    std::uint64_t uniformity() const { return ell_; }  // [k k-delta]_q
    const Subspace& vertex(std::uint32_t id) const { return vertices_.at(id); }
    std::uint32_t vertex_id(const Subspace& v) const;

    /// r(n) = [n-(k-delta) delta]_q.
    BigInt degree_formula() const;

    /// Edge ranks: pivot-set blocks in combination order, an odometer over
    /// free entries inside each block. Dense in [0, edge_count).
    Subspace edge_at(std::uint64_t rank) const;
    std::uint64_t edge_rank(const Subspace& e) const;

    /// The sorted vertex ids of an edge; always exactly [k k-delta]_q of them.
    std::vector<std::uint32_t> expand(const Subspace& e) const;

private:
    FieldPtr field_;
    unsigned n_, k_, delta_, vdim_;
    std::uint64_t ell_ = 0;
    std::uint64_t edge_count_ = 0;
    std::vector<Subspace> vertices_;
    std::unordered_map<std::string, std::uint32_t> vid_;
    std::vector<std::vector<std::uint16_t>> pivot_sets_;
    std::vector<std::uint64_t> block_start_;  // size pivot_sets_.size()+1
    std::unordered_map<std::string, std::uint32_t> pivot_block_;
};

/// Counts k-superspaces of a vertex and checks the count against the
/// degree formula; both computes and asserts.
BigInt vertex_degree(const IncidenceIndex& idx, std::uint32_t vertex_id);

/// Codegree of two distinct vertices: [n-(k-delta+i) delta-i]_q where
/// i = dim(U1+U2) - (k-delta), zero when delta < i; checked against a
/// direct superspace count whenever that enumeration fits the cap.
BigInt pair_codegree(const IncidenceIndex& idx, std::uint32_t v1, std::uint32_t v2);

struct RoundStats {
    unsigned round = 0;
    std::uint64_t proposed = 0;
    std::uint64_t accepted = 0;
    std::uint64_t live_edges = 0;          // after removal
    std::uint64_t uncovered_vertices = 0;  // after removal
};

struct MatchingResult {
    std::vector<Subspace> edges;  // pairwise vertex-disjoint, sorted
    std::uint64_t uncovered = 0;  // = vertex_count - ell * |edges|
    std::uint64_t seed = 0;
    std::string algorithm;
    std::vector<RoundStats> rounds;  // nibble only
};

/// Maximal matching over a seeded uniform shuffle of the edges: every edge
/// gets a key drawn in lexicographic-rank order, edges are visited by
/// (key, lex rank) and accepted when fully uncovered. Identical seeds give
/// identical results. Guarantees |matching| >= ceil(v / ell^2).
MatchingResult greedy_matching(const IncidenceIndex& idx, std::uint64_t seed);

/// Semi-random nibble: per round every surviving edge is proposed
/// independently with probability epsilon / (current average vertex
/// degree); proposals sharing a vertex are all dropped, accepted edges
/// join the matching, covered vertices and their edges are removed. After
/// max_rounds (or edge exhaustion) the survivors are finished greedily, so
/// the result is always maximal and carries the same floor guarantee.
MatchingResult nibble_matching(const IncidenceIndex& idx, std::uint64_t seed,
                               double epsilon, unsigned max_rounds);

/// Packages a matching as a verified SubspaceCode (min distance
/// 2delta+2); failure here would mean the matching was not a matching.
SubspaceCode matching_to_code(const IncidenceIndex& idx, const MatchingResult& result);

/// The optimal codes for the degenerate deltas handled outside the
/// hypergraph: delta = 0 gives the whole Grassmannian, delta = k the
/// first k-subspace in lexicographic order.
SubspaceCode trivial_optimal_code(FieldPtr field, unsigned n, unsigned k, unsigned delta);

}  // namespace grasscode
