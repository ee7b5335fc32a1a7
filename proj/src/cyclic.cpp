#include "grasscode/cyclic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "grasscode/bounds.hpp"
#include "grasscode/config.hpp"
#include "grasscode/designs.hpp"
#include "grasscode/rng.hpp"

namespace grasscode {

FieldSubspace to_field_repr(const Subspace& U, ExtFieldPtr ext) {
    if (!ext) throw std::invalid_argument("null extension field");
    if (U.n != ext->degree() || U.q != ext->base().q())
        throw std::invalid_argument("subspace parameters do not match the extension field");
    if (!ext->has_tables())
        throw CapExceeded("field representation needs a table-backed extension field");
    const Field& F = ext->base();
    const std::uint32_t q = F.q();

    FieldSubspace out;
    out.ext = ext;
    out.k = U.k;
    // walk all q^k coefficient tuples over the basis rows
    std::vector<unsigned> coeff(U.k, 0);
    std::vector<unsigned> vec(U.n, 0);
    while (true) {
        // advance odometer
        unsigned t = 0;
        while (t < U.k && ++coeff[t] == q) coeff[t++] = 0;
        if (t == U.k) break;
        std::fill(vec.begin(), vec.end(), 0);
        for (unsigned i = 0; i < U.k; ++i) {
            if (!coeff[i]) continue;
            for (unsigned j = 0; j < U.n; ++j)
                if (U.at(i, j)) vec[j] = F.add(vec[j], F.mul(coeff[i], U.at(i, j)));
        }
        std::uint64_t x = ext->from_coords(vec);
        if (x) out.logs.push_back(ext->dlog(x));
    }
    std::sort(out.logs.begin(), out.logs.end());
    return out;
}

Subspace from_field_repr(const FieldSubspace& V) {
    const ExtField& E = *V.ext;
    std::vector<std::vector<std::uint16_t>> rows;
    rows.reserve(V.logs.size());
    for (auto l : V.logs) {
        auto c = E.coords(E.alpha_pow(l));
        rows.emplace_back(c.begin(), c.end());
    }
    if (rows.empty()) return Subspace::zero(E.base().q(), E.degree());
    Subspace s = canonicalize(E.base(), rows, E.degree());
    if (s.k != V.k) throw std::logic_error("field representation dimension mismatch");
    return s;
}

bool additively_closed(const FieldSubspace& V) {
    const ExtField& E = *V.ext;
    std::unordered_set<std::uint64_t> elems;
    elems.insert(0);
    for (auto l : V.logs) elems.insert(E.alpha_pow(l));
    for (auto a : elems)
        for (auto b : elems)
            if (!elems.count(E.add(a, b))) return false;
    return true;
}

FieldSubspace alpha_shift(const FieldSubspace& V, std::uint64_t steps) {
    const std::uint64_t period = V.ext->period();
    FieldSubspace out;
    out.ext = V.ext;
    out.k = V.k;
    out.logs.reserve(V.logs.size());
    for (auto l : V.logs) out.logs.push_back((l + steps) % period);
    std::sort(out.logs.begin(), out.logs.end());
    return out;
}

std::vector<FieldSubspace> orbit(const FieldSubspace& V) {
    std::vector<FieldSubspace> out;
    out.push_back(V);
    for (std::uint64_t t = 1; t < V.ext->period(); ++t) {
        FieldSubspace s = alpha_shift(V, t);
        if (s == V) break;
        out.push_back(std::move(s));
    }
    if (V.ext->period() % out.size() != 0)
        throw std::logic_error("orbit length does not divide the group order");
    return out;
}

CharacteristicVector CharacteristicVector::of(const FieldSubspace& V) {
    CharacteristicVector x;
    x.bits.assign(V.ext->period(), false);
    for (auto l : V.logs) x.bits[l] = true;
    return x;
}

CharacteristicVector CharacteristicVector::rotated(std::uint64_t steps) const {
    const std::uint64_t N = bits.size();
    CharacteristicVector out;
    out.bits.assign(N, false);
    for (std::uint64_t i = 0; i < N; ++i)
        if (bits[i]) out.bits[(i + steps) % N] = true;
    return out;
}

std::uint64_t CharacteristicVector::popcount() const {
    std::uint64_t c = 0;
    for (bool b : bits) c += b;
    return c;
}

CyclicReport is_cyclic(const SubspaceCode& code, ExtFieldPtr ext) {
    for (const auto& member : code.members) {
        auto shifted = from_field_repr(alpha_shift(to_field_repr(member, ext), 1));
        if (!std::binary_search(code.members.begin(), code.members.end(), shifted))
            return {false, member};
    }
    return {true, std::nullopt};
}

namespace {

// Among the shifts of V, the one whose characteristic vector is
// lexicographically least. Comparing sorted one-position lists avoids
// materializing the vectors: at the first differing position the string
// with the later 1 is the smaller one.
std::uint64_t least_vector_shift(const FieldSubspace& V, std::uint64_t orbit_len) {
    std::uint64_t best = 0;
    std::vector<std::uint64_t> best_logs = V.logs, cand;
    for (std::uint64_t t = 1; t < orbit_len; ++t) {
        cand = alpha_shift(V, t).logs;
        if (std::lexicographical_compare(best_logs.begin(), best_logs.end(),
                                         cand.begin(), cand.end())) {
            best = t;
            best_logs = cand;
        }
    }
    return best;
}

}  // namespace

CyclicSearchResult cyclic_greedy_search(ExtFieldPtr ext, unsigned k, unsigned d,
                                        std::uint64_t seed) {
    if (d < 2 || d % 2 != 0 || d > 2 * k)
        throw std::invalid_argument("distance must be even and within 2..2k");
    const unsigned n = ext->degree();
    if (k > n) throw std::invalid_argument("k exceeds n");
    const Field& F = ext->base();
    const unsigned delta = (d - 2) / 2;

    struct Orbit {
        std::vector<Subspace> members;  // shift order 0,1,...
        Subspace representative;
        std::uint64_t length = 0;
    };
    std::vector<Orbit> orbits;
    std::set<Subspace> seen;
    {
        GrassmannStream st(ext->base_ptr(), n, k);
        while (auto s = st.next()) {
            if (seen.count(*s)) continue;
            FieldSubspace f = to_field_repr(*s, ext);
            auto shifts = orbit(f);
            Orbit o;
            o.length = shifts.size();
            for (const auto& sh : shifts) {
                o.members.push_back(from_field_repr(sh));
                seen.insert(o.members.back());
            }
            o.representative = o.members[least_vector_shift(f, o.length)];
            orbits.push_back(std::move(o));
        }
    }

    // seeded random order over orbits, ties by discovery order
    Rng rng(seed);
    std::vector<std::pair<std::uint64_t, std::uint32_t>> order;
    order.reserve(orbits.size());
    for (std::uint32_t i = 0; i < orbits.size(); ++i) order.emplace_back(rng.next(), i);
    std::sort(order.begin(), order.end());

    std::vector<Subspace> accepted;
    std::vector<OrbitInfo> accepted_info;
    const unsigned max_inter = k - d / 2;
    for (auto [key, oi] : order) {
        const Orbit& o = orbits[oi];
        bool ok = true;
        for (std::size_t i = 0; i < o.members.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < o.members.size() && ok; ++j)
                if (intersection_dim(F, o.members[i], o.members[j]) > max_inter) ok = false;
            for (std::size_t j = 0; j < accepted.size() && ok; ++j)
                if (intersection_dim(F, o.members[i], accepted[j]) > max_inter) ok = false;
        }
        if (!ok) continue;
        accepted.insert(accepted.end(), o.members.begin(), o.members.end());
        accepted_info.push_back({o.representative, o.length});
    }

    CyclicSearchResult res;
    std::optional<VerifiedTag> tag;
    if (!accepted.empty()) tag = VerifiedTag{VerifiedTag::Kind::MinDistance, d};
    res.code = make_code(ext->base_ptr(), n, k, std::move(accepted), tag);
    auto rep = verify_code(res.code, d);
    if (!rep.valid) throw std::logic_error("cyclic search emitted an invalid code");
    auto cyc = is_cyclic(res.code, ext);
    if (!cyc.cyclic) throw std::logic_error("cyclic search emitted a non-cyclic code");
    res.accepted = std::move(accepted_info);
    auto ratio = bound_ratio(BigInt(static_cast<unsigned long>(res.code.size())),
                             packing_ratio(F.q(), n, k, delta));
    res.ratio_to_packing = ratio.value;
    res.ratio_decimal = ratio.decimal;
    res.seed = seed;
    return res;
}

}  // namespace grasscode
