#include "grasscode/designs.hpp"

#include <algorithm>
#include <vector>

#include "grasscode/bounds.hpp"
#include "grasscode/config.hpp"

namespace grasscode {

namespace {

void require_verified_code(const SubspaceCode& code, unsigned d) {
    auto rep = verify_code(code, d);
    if (!rep.valid)
        throw VerificationFailure("input code fails distance " + std::to_string(d) +
                                  " at pair " + rep.violation->first.line_string() + " / " +
                                  rep.violation->second.line_string());
}

void require_verified_covering(const SubspaceCode& code, unsigned r) {
    auto rep = verify_covering(code, r);
    if (!rep.valid)
        throw VerificationFailure("input is not a covering at r=" + std::to_string(r) +
                                  ": " + std::to_string(rep.uncovered) +
                                  " uncovered, e.g. " + rep.witness->line_string());
}

void require_verified_turan(const SubspaceCode& code, unsigned k) {
    auto rep = verify_turan(code, k);
    if (!rep.valid)
        throw VerificationFailure("input is not a Turan design at k=" + std::to_string(k) +
                                  ": witness " + rep.witness->line_string());
}

}  // namespace

CodeReport verify_code(const SubspaceCode& code, unsigned d) {
    if (d < 2 || d % 2 != 0 || d > 2 * code.k)
        throw std::invalid_argument("distance must be even and within 2..2k");
    const Field& F = *code.field;
    CodeReport rep;
    rep.d = d;
    rep.valid = true;
    const unsigned max_inter = code.k - d / 2;
    for (std::size_t i = 0; i < code.members.size(); ++i) {
        for (std::size_t j = i + 1; j < code.members.size(); ++j) {
            unsigned inter = intersection_dim(F, code.members[i], code.members[j]);
            unsigned dist = 2 * code.k - 2 * inter;
            if (!rep.min_distance || dist < *rep.min_distance) rep.min_distance = dist;
            if (inter > max_inter && rep.valid) {
                rep.valid = false;
                rep.violation = {code.members[i], code.members[j]};
            }
        }
    }
    return rep;
}

CoveringReport verify_covering(const SubspaceCode& code, unsigned r) {
    if (r > code.k) throw std::invalid_argument("covering parameter r exceeds member dimension");
    const Field& F = *code.field;
    CoveringReport rep;
    rep.r = r;
    bool first = true;
    GrassmannStream st(code.field, code.n, r);
    while (auto u = st.next()) {
        std::uint64_t covers = 0;
        for (const auto& v : code.members)
            if (contains(F, v, *u)) ++covers;
        if (covers == 0) {
            ++rep.uncovered;
            if (!rep.witness) rep.witness = *u;
        }
        if (first) {
            rep.min_cover = rep.max_cover = covers;
            first = false;
        } else {
            rep.min_cover = std::min(rep.min_cover, covers);
            rep.max_cover = std::max(rep.max_cover, covers);
        }
    }
    rep.valid = rep.uncovered == 0 && !first;
    return rep;
}

TuranReport verify_turan(const SubspaceCode& code, unsigned k) {
    if (k < code.k || k > code.n)
        throw std::invalid_argument("Turan parameter k out of range");
    const Field& F = *code.field;
    TuranReport rep;
    rep.k = k;
    GrassmannStream st(code.field, code.n, k);
    while (auto x = st.next()) {
        bool hit = false;
        for (const auto& w : code.members)
            if (contains(F, *x, w)) { hit = true; break; }
        if (!hit) {
            ++rep.violations;
            if (!rep.witness) rep.witness = *x;
        }
    }
    rep.valid = rep.violations == 0;
    return rep;
}

SubspaceCode code_to_covering(const SubspaceCode& code, unsigned delta) {
    if (delta >= code.k) throw std::invalid_argument("need 0 <= delta < k");
    require_verified_code(code, 2 * delta + 2);
    const Field& F = *code.field;
    const unsigned r = code.k - delta;

    std::vector<Subspace> result = code.members;
    GrassmannStream st(code.field, code.n, r);
    while (auto u = st.next()) {
        bool covered = false;
        for (const auto& v : result)
            if (contains(F, v, *u)) { covered = true; break; }
        if (covered) continue;
        // extend U's basis with the least independent vectors, in
        // digit-string order over F_q^n
        std::vector<std::vector<std::uint16_t>> rows;
        for (unsigned i = 0; i < u->k; ++i)
            rows.emplace_back(u->m.begin() + i * u->n, u->m.begin() + (i + 1) * u->n);
        Subspace span = *u;
        std::uint64_t total = 1;
        for (unsigned i = 0; i < code.n; ++i) total *= F.q();
        for (std::uint64_t idx = 1; idx < total && span.k < code.k; ++idx) {
            std::vector<std::uint16_t> v(code.n);
            std::uint64_t t = idx;
            for (unsigned i = code.n; i-- > 0;) {
                v[i] = static_cast<std::uint16_t>(t % F.q());
                t /= F.q();
            }
            // independent iff v does not reduce to zero against span
            Subspace one = canonicalize(F, {v}, code.n);
            if (contains(F, span, one)) continue;
            rows.push_back(v);
            span = canonicalize(F, rows, code.n);
        }
        if (span.k != code.k) throw std::logic_error("basis completion failed");
        result.push_back(span);
    }

    auto out = make_code(code.field, code.n, code.k, std::move(result),
                         VerifiedTag{VerifiedTag::Kind::Covering, r});
    require_verified_covering(out, r);
    BigInt upsilon = gaussian_binomial(F.q(), code.n, r) -
                     gaussian_binomial(F.q(), code.k, r) * BigInt(static_cast<unsigned long>(code.size()));
    if (BigInt(static_cast<unsigned long>(out.size())) >
        BigInt(static_cast<unsigned long>(code.size())) + upsilon)
        throw std::logic_error("covering completion exceeded the Upsilon budget");
    return out;
}

SubspaceCode covering_to_code(const SubspaceCode& covering, unsigned delta) {
    if (delta >= covering.k) throw std::invalid_argument("need 0 <= delta < k");
    const unsigned r = covering.k - delta;
    require_verified_covering(covering, r);
    const Field& F = *covering.field;

    // Incidence pairs (U,V) ordered lexicographically by (U,V): members are
    // sorted, and U streams in lex order, so per-U cover lists arrive sorted.
    std::vector<bool> marked(covering.size(), false);
    GrassmannStream st(covering.field, covering.n, r);
    while (auto u = st.next()) {
        bool seen_first = false;
        for (std::size_t i = 0; i < covering.members.size(); ++i) {
            if (!contains(F, covering.members[i], *u)) continue;
            if (seen_first)
                marked[i] = true;  // an earlier (U, V') exists
            else
                seen_first = true;
        }
    }

    std::vector<Subspace> survivors;
    for (std::size_t i = 0; i < covering.members.size(); ++i)
        if (!marked[i]) survivors.push_back(covering.members[i]);

    auto out = make_code(covering.field, covering.n, covering.k, std::move(survivors),
                         VerifiedTag{VerifiedTag::Kind::MinDistance, 2 * delta + 2});
    require_verified_code(out, 2 * delta + 2);

    // survivor floor: at least |C| + [n r]_q - [k r]_q |C|
    BigInt m(static_cast<unsigned long>(covering.size()));
    BigInt floor = m + gaussian_binomial(F.q(), covering.n, r) -
                   gaussian_binomial(F.q(), covering.k, r) * m;
    if (BigInt(static_cast<unsigned long>(out.size())) < floor)
        throw std::logic_error("thinning removed more members than the bound allows");
    if (out.size() == 0) throw std::logic_error("thinning produced an empty code");
    return out;
}

SubspaceCode spread_construct(FieldPtr field, unsigned n, unsigned k) {
    if (k < 1 || k > n || n % k != 0)
        throw std::invalid_argument("spread requires k dividing n");
    auto ext = make_ext_field(field, n);
    if (!ext->has_tables())
        throw CapExceeded("spread construction needs a table-backed extension field");
    const Field& F = *field;
    const std::uint64_t period = ext->period();
    const std::uint64_t sub_order = big_pow(F.q(), k).get_ui() - 1;  // |GF(q^k)*|
    const std::uint64_t num_cosets = period / sub_order;

    std::vector<Subspace> members;
    std::vector<bool> hit(ext->size(), false);
    for (std::uint64_t i = 0; i < num_cosets; ++i) {
        std::vector<std::vector<std::uint16_t>> rows;
        for (std::uint64_t j = 0; j < sub_order; ++j) {
            std::uint64_t x = ext->alpha_pow(i + j * num_cosets);
            if (hit[x]) throw std::logic_error("spread cosets overlap");
            hit[x] = true;
            auto c = ext->coords(x);
            rows.emplace_back(c.begin(), c.end());
        }
        Subspace s = canonicalize(F, rows, n);
        if (s.k != k) throw std::logic_error("spread coset has wrong dimension");
        members.push_back(std::move(s));
    }
    for (std::uint64_t x = 1; x < ext->size(); ++x)
        if (!hit[x]) throw std::logic_error("spread does not cover all nonzero vectors");

    auto out = make_code(field, n, k, std::move(members),
                         VerifiedTag{VerifiedTag::Kind::MinDistance, 2 * k});
    if (out.size() != num_cosets) throw std::logic_error("spread size mismatch");
    require_verified_code(out, 2 * k);
    return out;
}

SubspaceCode dual_code(const SubspaceCode& code, unsigned d) {
    require_verified_code(code, d);
    const Field& F = *code.field;
    std::vector<Subspace> duals;
    duals.reserve(code.size());
    for (const auto& s : code.members) duals.push_back(orthogonal_complement(F, s));
    auto out = make_code(code.field, code.n, code.n - code.k, std::move(duals),
                         VerifiedTag{VerifiedTag::Kind::MinDistance, d});
    if (out.size() != code.size()) throw std::logic_error("dual collapsed members");
    require_verified_code(out, d);
    return out;
}

SubspaceCode lift_covering(const SubspaceCode& covering, unsigned r) {
    require_verified_covering(covering, r);
    const unsigned n = covering.n;
    std::vector<Subspace> lifted;
    lifted.reserve(covering.size());
    for (const auto& w : covering.members) {
        // rows of W with a zero appended, plus the new last standard vector;
        // already in reduced echelon form
        Subspace u;
        u.q = w.q;
        u.n = n + 1;
        u.k = w.k + 1;
        u.m.assign(static_cast<std::size_t>(u.k) * u.n, 0);
        for (unsigned i = 0; i < w.k; ++i)
            for (unsigned j = 0; j < n; ++j) u.m[i * u.n + j] = w.at(i, j);
        u.m[w.k * u.n + n] = 1;
        u.pivots = w.pivots;
        u.pivots.push_back(static_cast<std::uint16_t>(n));
        lifted.push_back(std::move(u));
    }
    auto out = make_code(covering.field, n + 1, covering.k + 1, std::move(lifted),
                         VerifiedTag{VerifiedTag::Kind::Covering, r});
    if (out.size() != covering.size()) throw std::logic_error("lift changed the size");
    require_verified_covering(out, r);
    return out;
}

SubspaceCode turan_dual(const SubspaceCode& design, DesignKind kind, unsigned param) {
    const Field& F = *design.field;
    std::vector<Subspace> duals;
    duals.reserve(design.size());
    if (kind == DesignKind::Covering) {
        // C_q(n,k,r) -> T_q(n, n-r, n-k)
        require_verified_covering(design, param);
        for (const auto& s : design.members) duals.push_back(orthogonal_complement(F, s));
        auto out = make_code(design.field, design.n, design.n - design.k, std::move(duals));
        if (out.size() != design.size()) throw std::logic_error("dual collapsed members");
        require_verified_turan(out, design.n - param);
        return out;
    }
    // T_q(n,k,r) with members of dimension r -> C_q(n, n-r, n-k)
    require_verified_turan(design, param);
    for (const auto& s : design.members) duals.push_back(orthogonal_complement(F, s));
    auto out = make_code(design.field, design.n, design.n - design.k, std::move(duals),
                         VerifiedTag{VerifiedTag::Kind::Covering, design.n - param});
    if (out.size() != design.size()) throw std::logic_error("dual collapsed members");
    require_verified_covering(out, design.n - param);
    return out;
}

}  // namespace grasscode
