#include "grasscode/matcher.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "grasscode/bounds.hpp"
#include "grasscode/config.hpp"
#include "grasscode/designs.hpp"
#include "grasscode/rng.hpp"

namespace grasscode {

namespace {

std::string subspace_key(const Subspace& s) {
    std::string key;
    key.reserve(s.m.size());
    for (auto v : s.m) key += digit_char(v);
    return key;
}

std::string pivot_key(const std::vector<std::uint16_t>& pivots) {
    std::string key;
    for (auto p : pivots) {
        key += static_cast<char>(p & 0xff);
        key += static_cast<char>(p >> 8);
    }
    return key;
}

std::uint64_t to_u64_checked(const BigInt& v, const char* what) {
    if (!v.fits_ulong_p()) throw CapExceeded(std::string(what) + " too large: " + v.get_str());
    return v.get_ui();
}

}  // namespace

IncidenceIndex::IncidenceIndex(FieldPtr field, unsigned n, unsigned k, unsigned delta)
    : field_(std::move(field)), n_(n), k_(k), delta_(delta), vdim_(k - delta) {
    if (!field_) throw std::invalid_argument("null field");
    if (k > n) throw std::invalid_argument("k exceeds n");
    if (delta == 0 || delta >= k)
        throw std::invalid_argument(
            "degenerate delta: the optimum is trivial (delta=0: all of G_q(n,k) "
            "attains the packing bound; delta=k: any single subspace); "
            "use trivial_optimal_code instead of building a hypergraph");

    const std::uint64_t q = field_->q();
    ell_ = to_u64_checked(gaussian_binomial(q, k, vdim_), "uniformity");
    BigInt edges = gaussian_binomial(q, n, k);
    if (edges > BigInt(std::to_string(caps().enumeration)))
        throw CapExceeded("edge table of " + edges.get_str() + " k-subspaces exceeds cap " +
                          std::to_string(caps().enumeration));
    edge_count_ = to_u64_checked(edges, "edge count");
    if (edge_count_ > 0xffffffffull ||
        gaussian_binomial(q, n, vdim_) > BigInt("4294967295"))
        throw CapExceeded("index tables need 32-bit ranks; parameters too large");

    // vertex table in lexicographic order; ids are lexicographic ranks
    GrassmannStream vst(field_, n, vdim_);
    while (auto v = vst.next()) {
        vid_.emplace(subspace_key(*v), static_cast<std::uint32_t>(vertices_.size()));
        vertices_.push_back(std::move(*v));
    }
    if (BigInt(std::to_string(vertices_.size())) != gaussian_binomial(q, n, vdim_))
        throw std::logic_error("vertex table does not match [n k-delta]_q");

    // pivot-set blocks for dense edge ranks
    std::vector<std::uint16_t> comb(k);
    for (unsigned i = 0; i < k; ++i) comb[i] = static_cast<std::uint16_t>(i);
    block_start_.push_back(0);
    while (true) {
        std::uint64_t free_count = 0;
        for (unsigned i = 0; i < k; ++i) free_count += n - k - comb[i] + i;
        std::uint64_t size = 1;
        for (std::uint64_t i = 0; i < free_count; ++i) size *= q;
        pivot_block_.emplace(pivot_key(comb), static_cast<std::uint32_t>(pivot_sets_.size()));
        pivot_sets_.push_back(comb);
        block_start_.push_back(block_start_.back() + size);

        int i = static_cast<int>(k) - 1;
        while (i >= 0 && comb[i] == n - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (unsigned j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (block_start_.back() != edge_count_)
        throw std::logic_error("pivot block sizes do not sum to the edge count");

    // spot-check the degree formula on a small vertex sample
    const BigInt expect = degree_formula();
    for (std::uint64_t v : {std::uint64_t{0}, vertices_.size() / 2, vertices_.size() - 1}) {
        std::uint64_t count = 0;
        SuperspaceStream st(field_, vertices_[v], k_);
        while (st.next()) ++count;
        if (BigInt(std::to_string(count)) != expect)
            throw std::logic_error("vertex degree sample disagrees with r(n)");
    }
}

std::uint32_t IncidenceIndex::vertex_id(const Subspace& v) const {
    auto it = vid_.find(subspace_key(v));
    if (it == vid_.end()) throw std::invalid_argument("unknown vertex");
    return it->second;
}

BigInt IncidenceIndex::degree_formula() const {
    return gaussian_binomial(field_->q(), n_ - vdim_, delta_);
}

Subspace IncidenceIndex::edge_at(std::uint64_t rank) const {
    if (rank >= edge_count_) throw std::invalid_argument("edge rank out of range");
    auto it = std::upper_bound(block_start_.begin(), block_start_.end(), rank);
    std::size_t b = static_cast<std::size_t>(it - block_start_.begin()) - 1;
    std::uint64_t offset = rank - block_start_[b];
    const auto& pivots = pivot_sets_[b];
    const std::uint32_t q = field_->q();

    Subspace s;
    s.q = q;
    s.n = n_;
    s.k = k_;
    s.pivots = pivots;
    s.m.assign(static_cast<std::size_t>(k_) * n_, 0);
    std::vector<bool> is_pivot(n_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::uint32_t> free_pos;
    for (unsigned i = 0; i < k_; ++i) {
        s.m[i * n_ + pivots[i]] = 1;
        for (unsigned j = pivots[i] + 1; j < n_; ++j)
            if (!is_pivot[j]) free_pos.push_back(i * n_ + j);
    }
    std::sort(free_pos.begin(), free_pos.end());
    // offset digits in base q, earliest flattened position most significant
    for (std::size_t t = free_pos.size(); t-- > 0;) {
        s.m[free_pos[t]] = static_cast<std::uint16_t>(offset % q);
        offset /= q;
    }
    if (offset) throw std::logic_error("edge rank decode overflow");
    return s;
}

std::uint64_t IncidenceIndex::edge_rank(const Subspace& e) const {
    auto it = pivot_block_.find(pivot_key(e.pivots));
    if (it == pivot_block_.end()) throw std::invalid_argument("not a k-subspace of this index");
    std::size_t b = it->second;
    const auto& pivots = pivot_sets_[b];
    std::vector<bool> is_pivot(n_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::uint64_t offset = 0;
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = pivots[i] + 1; j < n_; ++j)
            if (!is_pivot[j]) offset = offset * field_->q() + e.at(i, j);
    return block_start_[b] + offset;
}

std::vector<std::uint32_t> IncidenceIndex::expand(const Subspace& e) const {
    std::vector<std::uint32_t> ids;
    ids.reserve(ell_);
    SubspacesWithinStream st(field_, e, vdim_);
    while (auto u = st.next()) ids.push_back(vertex_id(*u));
    if (ids.size() != ell_) throw std::logic_error("edge expansion has wrong cardinality");
    std::sort(ids.begin(), ids.end());
    return ids;
}

BigInt vertex_degree(const IncidenceIndex& idx, std::uint32_t vertex_id) {
    if (vertex_id >= idx.vertex_count()) throw std::invalid_argument("unknown vertex");
    std::uint64_t count = 0;
    SuperspaceStream st(idx.field(), idx.vertex(vertex_id), idx.k());
    while (st.next()) ++count;
    BigInt counted(std::to_string(count));
    if (counted != idx.degree_formula())
        throw std::logic_error("vertex degree disagrees with the formula");
    return counted;
}

BigInt pair_codegree(const IncidenceIndex& idx, std::uint32_t v1, std::uint32_t v2) {
    if (v1 == v2) throw std::invalid_argument("codegree needs distinct vertices");
    const Field& F = *idx.field();
    const Subspace &U1 = idx.vertex(v1), &U2 = idx.vertex(v2);
    unsigned sdim = sum_dim(F, U1, U2);
    unsigned i = sdim - idx.vertex_dim();
    BigInt value = 0;
    if (i <= idx.delta())
        value = gaussian_binomial(F.q(), idx.n() - sdim, idx.delta() - i);

    // cross-check by direct count when the enumeration fits the cap
    if (i <= idx.delta()) {
        try {
            std::vector<std::vector<std::uint16_t>> rows;
            for (unsigned r = 0; r < U1.k; ++r)
                rows.emplace_back(U1.m.begin() + r * U1.n, U1.m.begin() + (r + 1) * U1.n);
            for (unsigned r = 0; r < U2.k; ++r)
                rows.emplace_back(U2.m.begin() + r * U2.n, U2.m.begin() + (r + 1) * U2.n);
            Subspace sum = canonicalize(F, rows, idx.n());
            SuperspaceStream st(idx.field(), sum, idx.k());
            std::uint64_t count = 0;
            while (st.next()) ++count;
            if (BigInt(std::to_string(count)) != value)
                throw std::logic_error("codegree formula disagrees with direct count");
        } catch (const CapExceeded&) {
            // too large to count directly; the formula stands on its own
        }
    }
    return value;
}

namespace {

struct MatchingAccumulator {
    explicit MatchingAccumulator(const IncidenceIndex& idx)
        : idx_(idx), covered_(idx.vertex_count(), false) {}

    bool try_accept(const Subspace& edge, const std::vector<std::uint32_t>& ids) {
        for (auto id : ids)
            if (covered_[id]) return false;
        for (auto id : ids) covered_[id] = true;
        covered_count_ += ids.size();
        edges_.push_back(edge);
        return true;
    }

    const IncidenceIndex& idx_;
    std::vector<bool> covered_;
    std::uint64_t covered_count_ = 0;
    std::vector<Subspace> edges_;
};

MatchingResult finalize(const IncidenceIndex& idx, MatchingAccumulator&& acc,
                        std::uint64_t seed, std::string algorithm,
                        std::vector<RoundStats> rounds) {
    MatchingResult res;
    res.edges = std::move(acc.edges_);
    std::sort(res.edges.begin(), res.edges.end());
    res.seed = seed;
    res.algorithm = std::move(algorithm);
    res.rounds = std::move(rounds);
    res.uncovered = idx.vertex_count() - idx.uniformity() * res.edges.size();
    if (res.uncovered != idx.vertex_count() - acc.covered_count_)
        throw std::logic_error("uncovered accounting mismatch");

    // hard floor: a maximal matching blocks at most ell*r edges per pick
    std::uint64_t ell2 = idx.uniformity() * idx.uniformity();
    std::uint64_t floor = (idx.vertex_count() + ell2 - 1) / ell2;
    if (res.edges.size() < floor)
        throw std::logic_error("matching below the maximality floor");
    BigInt upper = packing_bound(idx.field()->q(), idx.n(), idx.k(), idx.delta());
    if (BigInt(std::to_string(res.edges.size())) > upper)
        throw std::logic_error("matching exceeds the packing bound");
    return res;
}

struct ShuffleEntry {
    std::uint64_t key;
    std::uint32_t lex;
    std::uint32_t rank_hint;  // block rank for greedy over all edges
};

}  // namespace

MatchingResult greedy_matching(const IncidenceIndex& idx, std::uint64_t seed) {
    Rng rng(seed);
    // keys drawn in lexicographic order; ties broken by lexicographic rank
    std::vector<ShuffleEntry> perm;
    perm.reserve(idx.edge_count());
    {
        GrassmannStream st(idx.field(), idx.n(), idx.k());
        std::uint32_t lex = 0;
        while (auto e = st.next())
            perm.push_back({rng.next(), lex++, static_cast<std::uint32_t>(idx.edge_rank(*e))});
    }
    std::sort(perm.begin(), perm.end(), [](const ShuffleEntry& a, const ShuffleEntry& b) {
        return a.key != b.key ? a.key < b.key : a.lex < b.lex;
    });

    MatchingAccumulator acc(idx);
    for (const auto& entry : perm) {
        Subspace e = idx.edge_at(entry.rank_hint);
        acc.try_accept(e, idx.expand(e));
    }
    return finalize(idx, std::move(acc), seed, "greedy", {});
}

MatchingResult nibble_matching(const IncidenceIndex& idx, std::uint64_t seed,
                               double epsilon, unsigned max_rounds) {
    if (!(epsilon > 0.0) || epsilon > 0.2)
        throw std::invalid_argument("epsilon must lie in (0, 0.2]");
    if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");

    Rng rng(seed);
    const std::uint64_t ell = idx.uniformity();

    // live edges in lexicographic order, expansions cached; removal below is
    // stable so the canonical order survives every round
    struct Live {
        Subspace edge;
        std::vector<std::uint32_t> ids;
    };
    std::vector<Live> live;
    live.reserve(idx.edge_count());
    {
        GrassmannStream st(idx.field(), idx.n(), idx.k());
        while (auto e = st.next()) {
            auto ids = idx.expand(*e);
            live.push_back({std::move(*e), std::move(ids)});
        }
    }

    MatchingAccumulator acc(idx);
    std::vector<RoundStats> rounds;
    std::vector<std::uint32_t> usage(idx.vertex_count(), 0);

    for (unsigned round = 1; round <= max_rounds && !live.empty(); ++round) {
        std::uint64_t live_vertices = idx.vertex_count() - acc.covered_count_;
        double avg_degree =
            static_cast<double>(ell) * static_cast<double>(live.size()) /
            static_cast<double>(live_vertices);
        double p = std::min(1.0, epsilon / avg_degree);
        // integer threshold comparison keeps the draw deterministic
        std::uint64_t threshold =
            p >= 1.0 ? ~0ull : static_cast<std::uint64_t>(p * 18446744073709551616.0);

        std::vector<std::uint32_t> proposals;
        for (std::uint32_t i = 0; i < live.size(); ++i)
            if (rng.next() < threshold) proposals.push_back(i);

        for (auto i : proposals)
            for (auto id : live[i].ids) ++usage[id];

        std::uint64_t accepted = 0;
        for (auto i : proposals) {
            bool clash = false;
            for (auto id : live[i].ids)
                if (usage[id] != 1) { clash = true; break; }
            if (clash) continue;
            if (acc.try_accept(live[i].edge, live[i].ids)) ++accepted;
        }
        for (auto i : proposals)
            for (auto id : live[i].ids) usage[id] = 0;

        if (accepted) {
            std::erase_if(live, [&](const Live& l) {
                for (auto id : l.ids)
                    if (acc.covered_[id]) return true;
                return false;
            });
        }
        rounds.push_back({round, proposals.size(), accepted, live.size(),
                          idx.vertex_count() - acc.covered_count_});
    }

    // finish greedily on the survivors; keys drawn in the surviving
    // lexicographic order, ties broken by position (= lexicographic rank)
    std::vector<ShuffleEntry> perm;
    perm.reserve(live.size());
    for (std::uint32_t i = 0; i < live.size(); ++i) perm.push_back({rng.next(), i, i});
    std::sort(perm.begin(), perm.end(), [](const ShuffleEntry& a, const ShuffleEntry& b) {
        return a.key != b.key ? a.key < b.key : a.lex < b.lex;
    });
    for (const auto& entry : perm)
        acc.try_accept(live[entry.rank_hint].edge, live[entry.rank_hint].ids);

    return finalize(idx, std::move(acc), seed, "nibble", std::move(rounds));
}

SubspaceCode matching_to_code(const IncidenceIndex& idx, const MatchingResult& result) {
    auto code = make_code(idx.field(), idx.n(), idx.k(), result.edges,
                          VerifiedTag{VerifiedTag::Kind::MinDistance, 2 * idx.delta() + 2});
    auto rep = verify_code(code, 2 * idx.delta() + 2);
    if (!rep.valid)
        throw VerificationFailure(
            "matching produced an invalid code (implementation bug) at pair " +
            rep.violation->first.line_string() + " / " + rep.violation->second.line_string());
    return code;
}

SubspaceCode trivial_optimal_code(FieldPtr field, unsigned n, unsigned k, unsigned delta) {
    if (delta != 0 && delta != k)
        throw std::invalid_argument("trivial codes exist only for delta in {0, k}");
    std::vector<Subspace> members;
    GrassmannStream st(field, n, k);
    if (delta == 0) {
        while (auto s = st.next()) members.push_back(std::move(*s));
    } else {
        auto s = st.next();
        members.push_back(std::move(*s));
    }
    unsigned d = std::min(2 * delta + 2, 2 * k);  // single-member codes max out at 2k
    return make_code(std::move(field), n, k, std::move(members),
                     VerifiedTag{VerifiedTag::Kind::MinDistance, d});
}

}  // namespace grasscode
