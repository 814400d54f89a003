#include "tropideal/valuated_matroid.hpp"

#include "tropideal/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace tropideal {

int popcount(Mask m) { return std::popcount(m); }

std::vector<int> mask_indices(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

Mask mask_of(const std::vector<int>& indices) {
    Mask m = 0;
    for (int i : indices) {
        if (i < 0 || i >= kMaxGround) throw InputError("ground index " + std::to_string(i) + " out of range");
        m |= bit(i);
    }
    return m;
}

bool mask_lex_less(Mask a, Mask b) {
    if (a == b) return false;
    // The lowest differing element decides, unless the set lacking it stops there
    // (then that set is a proper prefix of the other).
    const int low = std::countr_zero(a ^ b);
    const bool a_has = (a >> low) & 1U;
    const Mask lacking = a_has ? b : a;
    if ((lacking >> low) == 0) return !a_has;
    return a_has;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

void for_each_subset(int n, int k, const std::function<void(Mask)>& f, const std::string& what) {
    if (n > kMaxGround) throw SizeError(what + ": ground set larger than " + std::to_string(kMaxGround));
    if (k < 0 || k > n) return;
    require_within_cap(binomial(n, k), what);
    if (k == 0) {
        f(0);
        return;
    }
    Mask s = (k == 64) ? ~Mask{0} : bit(k) - 1;
    while (true) {
        f(s);
        const Mask c = s & (~s + 1);
        const Mask r = s + c;
        if (r == 0) return;  // wrapped past bit 63
        s = (((r ^ s) >> 2) / c) | r;
        if (n < 64 && s >= bit(n)) return;
    }
}

// --- OrdMatroid -----------------------------------------------------------------

namespace {

void check_ground(const std::vector<std::string>& ground, int rank) {
    if (static_cast<int>(ground.size()) > kMaxGround)
        throw SizeError("ground sets larger than " + std::to_string(kMaxGround) + " elements are not supported");
    if (rank < 0 || rank > static_cast<int>(ground.size()))
        throw InputError("rank " + std::to_string(rank) + " incompatible with ground size " +
                         std::to_string(ground.size()));
    std::set<std::string> seen(ground.begin(), ground.end());
    if (seen.size() != ground.size()) throw InputError("duplicate ground labels");
}

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

void sort_lex(std::vector<Mask>& v) {
    std::sort(v.begin(), v.end(), mask_lex_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

OrdMatroid::OrdMatroid(std::vector<std::string> ground, int rank, std::vector<Mask> bases)
    : ground_(std::move(ground)), rank_(rank), bases_(std::move(bases)) {
    check_ground(ground_, rank_);
    if (bases_.empty()) throw InputError("a matroid needs at least one basis");
    const Mask full = full_mask(size());
    for (Mask b : bases_) {
        if ((b & ~full) != 0 || popcount(b) != rank_) throw InputError("basis does not match rank or ground");
    }
    sort_lex(bases_);
}

bool OrdMatroid::is_basis(Mask b) const {
    return std::binary_search(bases_.begin(), bases_.end(), b, mask_lex_less);
}

bool OrdMatroid::is_independent(Mask s) const {
    return std::any_of(bases_.begin(), bases_.end(), [s](Mask b) { return (s & ~b) == 0; });
}

Mask OrdMatroid::loops() const {
    Mask covered = 0;
    for (Mask b : bases_) covered |= b;
    return full_mask(size()) & ~covered;
}

std::vector<Mask> circuits(const OrdMatroid& m) {
    std::vector<Mask> out;
    std::unordered_set<Mask> seen;
    const Mask full = full_mask(m.size());
    for (Mask b : m.bases()) {
        for (int e : mask_indices(full & ~b)) {
            Mask c = bit(e);
            for (int f : mask_indices(b))
                if (m.is_basis((b & ~bit(f)) | bit(e))) c |= bit(f);
            if (seen.insert(c).second) out.push_back(c);
        }
    }
    sort_lex(out);
    return out;
}

// --- VMatroid -------------------------------------------------------------------

VMatroid::VMatroid(std::vector<std::string> ground, int rank, std::map<Mask, Rational> valuation)
    : ground_(std::move(ground)), rank_(rank), valuation_(std::move(valuation)) {
    check_ground(ground_, rank_);
    if (valuation_.empty()) throw InputError("invalid valuated matroid: no basis has finite value");
    const Mask full = full_mask(size());
    Rational lo = valuation_.begin()->second;
    for (const auto& [b, v] : valuation_) {
        if ((b & ~full) != 0 || popcount(b) != rank_)
            throw InputError("valuation set does not have size equal to the rank");
        lo = std::min(lo, v);
    }
    if (lo != 0)
        for (auto& [b, v] : valuation_) v -= lo;
}

VMatroid VMatroid::from_bases(std::vector<std::string> ground, int rank, const std::vector<Mask>& bases) {
    std::map<Mask, Rational> val;
    for (Mask b : bases) val.emplace(b, Rational(0));
    return VMatroid(std::move(ground), rank, std::move(val));
}

VMatroid VMatroid::from(const OrdMatroid& m) { return from_bases(m.ground(), m.rank(), m.bases()); }

TropScalar VMatroid::value(Mask b) const {
    auto it = valuation_.find(b);
    return it == valuation_.end() ? TropScalar::infinity() : TropScalar(it->second);
}

std::vector<Mask> VMatroid::bases() const {
    std::vector<Mask> out;
    out.reserve(valuation_.size());
    for (const auto& [b, v] : valuation_) out.push_back(b);
    return out;
}

bool VMatroid::is_trivially_valued() const {
    return std::all_of(valuation_.begin(), valuation_.end(), [](const auto& kv) { return kv.second == 0; });
}

OrdMatroid underlying(const VMatroid& m) { return OrdMatroid(m.ground(), m.rank(), m.bases()); }

Mask support(const VVector& v) {
    Mask s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i].is_finite()) s |= bit(static_cast<int>(i));
    return s;
}

VVector canonical(VVector v) {
    TropScalar lo = TropScalar::infinity();
    for (const auto& x : v) lo = oplus(lo, x);
    if (lo.is_inf() || lo.value() == 0) return v;
    for (auto& x : v)
        if (x.is_finite()) x = TropScalar(x.value() - lo.value());
    return v;
}

namespace {

using ValueTable = std::unordered_map<Mask, const Rational*>;

ValueTable table_of(const VMatroid& m) {
    ValueTable t;
    t.reserve(m.valuation().size() * 2);
    for (const auto& [b, v] : m.valuation()) t.emplace(b, &v);
    return t;
}

const Rational* lookup(const ValueTable& t, Mask b) {
    auto it = t.find(b);
    return it == t.end() ? nullptr : it->second;
}

}  // namespace

std::optional<ExchangeViolation> check_valuated_exchange(const VMatroid& m) {
    const ValueTable t = table_of(m);
    const auto& val = m.valuation();
    const bool trivial = m.is_trivially_valued();
    for (const auto& [a_set, pa] : val) {
        for (const auto& [b_set, pb] : val) {
            if (a_set == b_set) continue;
            const Rational lhs = pa + pb;
            for (int a : mask_indices(a_set & ~b_set)) {
                bool found = false;
                for (int b : mask_indices(b_set & ~a_set)) {
                    const Rational* x = lookup(t, (a_set & ~bit(a)) | bit(b));
                    if (!x) continue;
                    const Rational* y = lookup(t, (b_set & ~bit(b)) | bit(a));
                    if (!y) continue;
                    if (trivial || *x + *y <= lhs) {
                        found = true;
                        break;
                    }
                }
                if (!found) return ExchangeViolation{a_set, b_set, a};
            }
        }
    }
    return std::nullopt;
}

VVector fundamental_circuit(const VMatroid& m, Mask basis, int e) {
    const TropScalar pb = m.value(basis);
    if (pb.is_inf()) throw PreconditionError("fundamental_circuit: B is not a basis");
    if (e < 0 || e >= m.size() || (basis & bit(e)))
        throw PreconditionError("fundamental_circuit: element lies in B or outside the ground set");
    VVector h(static_cast<std::size_t>(m.size()));
    const Mask with_e = basis | bit(e);
    for (int f : mask_indices(with_e)) {
        const TropScalar q = m.value(with_e & ~bit(f));
        if (q.is_finite()) h[static_cast<std::size_t>(f)] = TropScalar(q.value() - pb.value());
    }
    return canonical(std::move(h));
}

std::vector<VVector> circuits(const VMatroid& m) {
    const ValueTable t = table_of(m);
    const Mask full = full_mask(m.size());
    std::map<Mask, VVector, bool (*)(Mask, Mask)> found(mask_lex_less);
    for (const auto& [b, pb] : m.valuation()) {
        for (int e : mask_indices(full & ~b)) {
            Mask supp = bit(e);
            for (int f : mask_indices(b))
                if (lookup(t, (b & ~bit(f)) | bit(e))) supp |= bit(f);
            if (found.count(supp)) continue;
            found.emplace(supp, fundamental_circuit(m, b, e));
        }
    }
    std::vector<VVector> out;
    out.reserve(found.size());
    for (auto& [s, h] : found) out.push_back(std::move(h));
    return out;
}

VMatroid dual(const VMatroid& m) {
    const Mask full = full_mask(m.size());
    std::map<Mask, Rational> val;
    for (const auto& [b, v] : m.valuation()) val.emplace(full & ~b, v);
    return VMatroid(m.ground(), m.size() - m.rank(), std::move(val));
}

bool is_vector(const VMatroid& m, const VVector& v) {
    if (static_cast<int>(v.size()) != m.size())
        throw DimensionError("vector length " + std::to_string(v.size()) + " does not match ground size " +
                             std::to_string(m.size()));
    if (m.rank() == 0) return true;
    const ValueTable t = table_of(m);
    const Mask full = full_mask(m.size());
    // A vector must attain min_{e notin T} p(T + e) + v_e at least twice for every
    // (r-1)-subset T; only T inside some basis can have a finite term.
    std::unordered_set<Mask> seen;
    for (const auto& [b, pb] : m.valuation()) {
        for (int drop : mask_indices(b)) {
            const Mask tset = b & ~bit(drop);
            if (!seen.insert(tset).second) continue;
            TropScalar best = TropScalar::infinity();
            int hits = 0;
            for (int e : mask_indices(full & ~tset)) {
                const auto& ve = v[static_cast<std::size_t>(e)];
                if (ve.is_inf()) continue;
                const Rational* p = lookup(t, tset | bit(e));
                if (!p) continue;
                const TropScalar term(*p + ve.value());
                if (term < best) {
                    best = term;
                    hits = 1;
                } else if (term == best) {
                    ++hits;
                }
            }
            if (best.is_finite() && hits == 1) return false;
        }
    }
    return true;
}

OrdMatroid initial_matroid(const VMatroid& m, const std::vector<Rational>& w) {
    if (static_cast<int>(w.size()) != m.size())
        throw DimensionError("weight length " + std::to_string(w.size()) + " does not match ground size " +
                             std::to_string(m.size()));
    std::vector<Mask> best;
    std::optional<Rational> best_val;
    for (const auto& [b, pb] : m.valuation()) {
        Rational s = pb;
        for (int e : mask_indices(b)) s -= w[static_cast<std::size_t>(e)];
        if (!best_val || s < *best_val) {
            best_val = s;
            best.assign(1, b);
        } else if (s == *best_val) {
            best.push_back(b);
        }
    }
    return OrdMatroid(m.ground(), m.rank(), std::move(best));
}

int subset_rank(const VMatroid& m, Mask a) {
    int r = 0;
    for (const auto& [b, v] : m.valuation()) r = std::max(r, popcount(b & a));
    return r;
}

Mask lex_smallest_basis_of(const VMatroid& m, Mask a) {
    const auto bases = m.bases();
    auto independent = [&](Mask s) {
        return std::any_of(bases.begin(), bases.end(), [s](Mask b) { return (s & ~b) == 0; });
    };
    Mask chosen = 0;
    for (int e : mask_indices(a))
        if (independent(chosen | bit(e))) chosen |= bit(e);
    return chosen;
}

VMatroid contract(const VMatroid& m, Mask a) {
    const Mask full = full_mask(m.size());
    if ((a & ~full) != 0) throw PreconditionError("contract: subset outside the ground set");
    const Mask ba = lex_smallest_basis_of(m, a);
    std::vector<std::string> ground;
    std::vector<int> new_index(static_cast<std::size_t>(m.size()), -1);
    for (int i = 0; i < m.size(); ++i) {
        if (a & bit(i)) continue;
        new_index[static_cast<std::size_t>(i)] = static_cast<int>(ground.size());
        ground.push_back(m.ground()[static_cast<std::size_t>(i)]);
    }
    std::map<Mask, Rational> val;
    for (const auto& [b, pb] : m.valuation()) {
        if ((b & a) != ba) continue;
        Mask nb = 0;
        for (int e : mask_indices(b & ~a)) nb |= bit(new_index[static_cast<std::size_t>(e)]);
        val.emplace(nb, pb);
    }
    return VMatroid(std::move(ground), m.rank() - popcount(ba), std::move(val));
}

namespace {

std::vector<std::string> extended_ground(const std::vector<std::string>& ground,
                                         const std::vector<std::string>& labels) {
    std::set<std::string> existing(ground.begin(), ground.end());
    std::vector<std::string> out = ground;
    for (const auto& l : labels) {
        if (existing.count(l)) throw InputError("coloop extension: label '" + l + "' already in the ground set");
        out.push_back(l);
    }
    return out;
}

}  // namespace

VMatroid coloop_extension(const VMatroid& m, const std::vector<std::string>& labels) {
    auto ground = extended_ground(m.ground(), labels);
    Mask extra = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) extra |= bit(m.size() + static_cast<int>(i));
    std::map<Mask, Rational> val;
    for (const auto& [b, v] : m.valuation()) val.emplace(b | extra, v);
    return VMatroid(std::move(ground), m.rank() + static_cast<int>(labels.size()), std::move(val));
}

OrdMatroid coloop_extension(const OrdMatroid& m, const std::vector<std::string>& labels) {
    auto ground = extended_ground(m.ground(), labels);
    Mask extra = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) extra |= bit(m.size() + static_cast<int>(i));
    std::vector<Mask> bases;
    for (Mask b : m.bases()) bases.push_back(b | extra);
    return OrdMatroid(std::move(ground), m.rank() + static_cast<int>(labels.size()), std::move(bases));
}

OrdMatroid reorder(const OrdMatroid& m, const std::vector<std::string>& order) {
    if (order.size() != m.ground().size()) throw InputError("reorder: label list size mismatch");
    std::map<std::string, int> target;
    for (std::size_t i = 0; i < order.size(); ++i) target[order[i]] = static_cast<int>(i);
    std::vector<int> to(static_cast<std::size_t>(m.size()));
    for (int i = 0; i < m.size(); ++i) {
        auto it = target.find(m.ground()[static_cast<std::size_t>(i)]);
        if (it == target.end()) throw InputError("reorder: label missing from target order");
        to[static_cast<std::size_t>(i)] = it->second;
    }
    std::vector<Mask> bases;
    for (Mask b : m.bases()) {
        Mask nb = 0;
        for (int e : mask_indices(b)) nb |= bit(to[static_cast<std::size_t>(e)]);
        bases.push_back(nb);
    }
    return OrdMatroid(order, m.rank(), std::move(bases));
}

}  // namespace tropideal
