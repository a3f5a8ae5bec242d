#include "wps/count.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <future>
#include <map>
#include <sstream>
#include <thread>

#include "wps/point.hpp"

namespace wps {

namespace {

using u64 = unsigned long long;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int resolve_threads(EnumConfig const & cfg)
{
    if (cfg.threads > 0)
        return cfg.threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

SpfTable const & spf_table()
{
    static SpfTable table(2'000'000);
    return table;
}

/* largest n >= 0 with n^den * Q <= P */
Int floor_power_big(BigInt const & P, BigInt const & Q, Int den)
{
    if (P < Q)
        return 0;
    Int lo = 1, hi = 1;
    auto ok = [&](Int n) {
        return big_pow(BigInt(n), static_cast<unsigned long long>(den)) * Q <=
               P;
    };
    while (ok(2 * hi)) {
        hi *= 2;
        if (hi > (Int(1) << 60))
            throw budget_error("coordinate bound exceeds 64-bit range");
    }
    hi *= 2;
    while (lo < hi) { // lo always ok, hi not
        Int mid = lo + (hi - lo + 1) / 2;
        if (ok(mid))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

/* largest integer norm n with n <= (T * extra)^w, T = base^{num/den} */
Int box_bound(SizeBound const & b, int w, Int extra)
{
    BigInt P = big_pow(BigInt(b.base.numerator()),
                       static_cast<unsigned long long>(b.num * w)) *
               big_pow(BigInt(extra),
                       static_cast<unsigned long long>(w * b.den));
    BigInt Q = big_pow(BigInt(b.base.denominator()),
                       static_cast<unsigned long long>(b.num * w));
    return floor_power_big(P, Q, b.den);
}

void check_budget(long double visits, unsigned long long budget)
{
    if (visits > static_cast<long double>(budget)) {
        std::ostringstream os;
        os << "enumeration budget exceeded: needs about " << std::scientific
           << static_cast<double>(visits) << " lattice visits (budget "
           << budget << ")";
        throw budget_error(os.str());
    }
}

template <class Fn>
u64 parallel_sum(Int lo, Int hi, int threads, Fn && chunk_fn)
{
    if (hi < lo)
        return 0;
    Int n = hi - lo + 1;
    int chunks = static_cast<int>(
        std::min<Int>(n, static_cast<Int>(threads) * 4));
    if (chunks <= 1)
        return chunk_fn(lo, hi);
    std::vector<std::future<u64>> futs;
    Int step = n / chunks, extra = n % chunks, at = lo;
    for (int c = 0; c < chunks; ++c) {
        Int len = step + (c < extra ? 1 : 0);
        Int a = at, b = at + len - 1;
        at += len;
        futs.push_back(std::async(std::launch::async,
                                  [a, b, &chunk_fn]() { return chunk_fn(a, b); }));
    }
    u64 total = 0;
    for (auto & f : futs)
        total += f.get();
    return total;
}

bool powerfree(SpfTable const & spf, Int x, int w)
{
    x = iabs(x);
    if (w == 1)
        return x == 1;
    std::vector<Int> primes;
    spf.distinct_primes(x, primes);
    for (Int p : primes) {
        int v = 0;
        Int n = x;
        while (n % p == 0) {
            n /= p;
            ++v;
        }
        if (v >= w)
            return false;
    }
    return true;
}

Int val_at(Int x, Int p)
{
    Int v = 0;
    x = iabs(x);
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

/* ------------------------------------------------------------------ */
/* direct counting over Q                                              */
/* ------------------------------------------------------------------ */

struct RatWorker {
    std::vector<int> const & w;
    std::vector<Int> const & B;
    int m;
    int oc; // constrained coordinate, -1 if none
    SpfTable const & spf;
    std::vector<Int> prefix;
    std::vector<Int> primebuf;
    std::vector<Int> Sbuf;
    u64 total = 0;

    RatWorker(std::vector<int> const & w_, std::vector<Int> const & B_,
              int oc_)
        : w(w_), B(B_), m(static_cast<int>(w_.size())), oc(oc_),
          spf(spf_table())
    {
        prefix.reserve(m);
    }

    /* count of x in [lo,hi] divisible by d (d possibly clamped huge) */
    static Int multiples_in(Int lo, Int hi, Int d)
    {
        return floor_div(hi, d) - floor_div(lo - 1, d);
    }

    u64 last_level(bool sign_fixed, bool any_nonzero, Int g)
    {
        int wl = w[m - 1];
        Int Bl = B[m - 1];
        Int lo = (wl % 2 == 1 && !sign_fixed) ? 0 : -Bl;
        Int hi = Bl;
        if (!any_nonzero) {
            // all earlier coordinates zero: content is trivial iff the last
            // coordinate is w_l-th-power-free (|x| = 1 when w_l = 1)
            u64 c = 0;
            for (Int x = 1; x <= hi; ++x)
                if (powerfree(spf, x, wl))
                    ++c;
            if (lo < 0)
                c *= 2;
            return c;
        }
        Sbuf.clear();
        if (g > 1) {
            spf.distinct_primes(g, primebuf);
            for (Int p : primebuf) {
                bool all = true;
                for (int i = 0; i + 1 < m && all; ++i) {
                    if (prefix[i] == 0)
                        continue;
                    all = val_at(prefix[i], p) >= w[i];
                }
                if (all)
                    Sbuf.push_back(p);
            }
        }
        // inclusion-exclusion over primes whose content condition is already
        // met on the prefix; x = 0 is divisible by everything and nets out
        // exactly when S is nonempty
        long long cnt = 0;
        unsigned nS = static_cast<unsigned>(Sbuf.size());
        for (unsigned mask = 0; mask < (1u << nS); ++mask) {
            Int d = 1;
            for (unsigned j = 0; j < nS; ++j) {
                if (!(mask & (1u << j)))
                    continue;
                for (int rep = 0; rep < wl && d <= hi; ++rep)
                    d *= Sbuf[j];
                if (d > hi) {
                    d = hi + 1; // only x = 0 can be a multiple
                    break;
                }
            }
            Int c = multiples_in(lo, hi, d);
            cnt += (__builtin_popcount(mask) & 1) ? -c : c;
        }
        bool zero_in = lo <= 0;
        bool zero_allowed = oc != m - 1;
        if (nS == 0 && zero_in && !zero_allowed)
            cnt -= 1;
        invariant(cnt >= 0, "negative inclusion-exclusion count");
        return static_cast<u64>(cnt);
    }

    void dfs(int level, bool sign_fixed, bool any_nonzero, Int g)
    {
        if (level == m - 1) {
            total += last_level(sign_fixed, any_nonzero, g);
            return;
        }
        int wi = w[level];
        Int lo = (wi % 2 == 1 && !sign_fixed) ? 0 : -B[level];
        for (Int v = lo; v <= B[level]; ++v) {
            if (v == 0 && oc == level)
                continue;
            prefix.push_back(v);
            dfs(level + 1, sign_fixed || (v != 0 && wi % 2 == 1),
                any_nonzero || v != 0, v != 0 ? std::gcd(g, iabs(v)) : g);
            prefix.pop_back();
        }
    }

    /* first-coordinate slice [lo,hi] of the canonical range */
    u64 run_slice(Int lo, Int hi)
    {
        total = 0;
        if (m == 1) {
            total = last_level(false, false, 0);
            return total;
        }
        int w0 = w[0];
        for (Int v = lo; v <= hi; ++v) {
            if (v == 0 && oc == 0)
                continue;
            prefix.assign(1, v);
            dfs(1, v != 0 && w0 % 2 == 1, v != 0,
                v != 0 ? iabs(v) : Int(0));
        }
        return total;
    }
};

std::vector<Int> rational_box(Weight const & W, SizeBound const & bound)
{
    std::vector<Int> B;
    for (int i = 0; i < W.size(); ++i)
        B.push_back(box_bound(bound, W[i], 1));
    return B;
}

u64 rational_direct_count(Weight const & W, SizeBound const & bound,
                          std::optional<OpenConstraint> const & oc,
                          EnumConfig const & cfg)
{
    std::vector<int> const & w = W.entries();
    std::vector<Int> B = rational_box(W, bound);
    long double visits = 1;
    for (Int b : B)
        visits *= 2.0L * b + 1;
    check_budget(visits, cfg.budget);
    int occ = oc ? oc->coord : -1;
    if (oc) {
        require(oc->factor == 0, "open constraint names a missing factor");
        require(occ >= 0 && occ < W.size(),
                "open constraint names a missing coordinate");
    }
    if (W.size() == 1) {
        RatWorker wk(w, B, occ);
        return wk.run_slice(0, 0);
    }
    Int lo0 = (w[0] % 2 == 1) ? 0 : -B[0];
    return parallel_sum(lo0, B[0], resolve_threads(cfg),
                        [&](Int a, Int b) {
                            RatWorker wk(w, B, occ);
                            return wk.run_slice(a, b);
                        });
}

/* ------------------------------------------------------------------ */
/* exact size keys for spectra                                         */
/* ------------------------------------------------------------------ */

/* value = n^{1/w} / den with n >= 0, w >= 1, den >= 1 */
struct ExactSize {
    Int n = 0;
    int w = 1;
    Int den = 1;
};

std::strong_ordering cmp_exact_size(ExactSize const & a, ExactSize const & b)
{
    // n1^{1/w1}/d1 ? n2^{1/w2}/d2  <=>  n1^{L/w1} d2^L ? n2^{L/w2} d1^L
    int L = std::lcm(a.w, b.w);
    double la = std::log(static_cast<double>(std::max<Int>(a.n, 0)) + 0.0) *
                    (static_cast<double>(L) / a.w) +
                static_cast<double>(L) * std::log(static_cast<double>(b.den));
    double lb = std::log(static_cast<double>(std::max<Int>(b.n, 0)) + 0.0) *
                    (static_cast<double>(L) / b.w) +
                static_cast<double>(L) * std::log(static_cast<double>(a.den));
    if (a.n == 0 || b.n == 0) {
        if (a.n == b.n)
            return std::strong_ordering::equal;
        return a.n == 0 ? std::strong_ordering::less
                        : std::strong_ordering::greater;
    }
    if (la < lb - 1e-9)
        return std::strong_ordering::less;
    if (la > lb + 1e-9)
        return std::strong_ordering::greater;
    BigInt lhs = big_pow(BigInt(a.n), static_cast<unsigned long long>(L / a.w)) *
                 big_pow(BigInt(b.den), static_cast<unsigned long long>(L));
    BigInt rhs = big_pow(BigInt(b.n), static_cast<unsigned long long>(L / b.w)) *
                 big_pow(BigInt(a.den), static_cast<unsigned long long>(L));
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

struct ExactSizeLess {
    bool operator()(ExactSize const & a, ExactSize const & b) const
    {
        return cmp_exact_size(a, b) == std::strong_ordering::less;
    }
};

using SpectrumMap = std::map<ExactSize, u64, ExactSizeLess>;

void merge_spectrum(SpectrumMap & into, SpectrumMap const & from)
{
    for (auto const & [k, v] : from)
        into[k] += v;
}

/* primitive over Q: no prime p has v_p(x_i) >= w_i on all nonzero coords */
bool rational_primitive(SpfTable const & spf, std::vector<Int> const & xs,
                        std::vector<int> const & w,
                        std::vector<Int> & primebuf)
{
    Int g = 0;
    for (Int v : xs)
        if (v != 0)
            g = std::gcd(g, iabs(v));
    if (g <= 1)
        return g == 1; // g = 0 cannot happen for nonzero tuples
    spf.distinct_primes(g, primebuf);
    for (Int p : primebuf) {
        bool all = true;
        for (size_t i = 0; i < xs.size() && all; ++i) {
            if (xs[i] == 0)
                continue;
            all = val_at(xs[i], p) >= w[i];
        }
        if (all)
            return false;
    }
    return true;
}

SpectrumMap rational_spectrum(Weight const & W, SizeBound const & bound,
                              std::optional<OpenConstraint> const & oc,
                              EnumConfig const & cfg)
{
    std::vector<int> const & w = W.entries();
    std::vector<Int> B = rational_box(W, bound);
    long double visits = 1;
    for (Int b : B)
        visits *= 2.0L * b + 1;
    check_budget(visits, cfg.budget);
    int occ = oc ? oc->coord : -1;
    if (oc)
        require(occ >= 0 && occ < W.size() && oc->factor == 0,
                "open constraint names a missing coordinate");
    int m = W.size();
    SpfTable const & spf = spf_table();

    auto slice = [&](Int lo0, Int hi0) {
        SpectrumMap map;
        std::vector<Int> xs(m, 0);
        std::vector<Int> primebuf;
        // depth-first over canonical ranges
        auto rec = [&](auto && self, int level, bool sign_fixed,
                       bool any_nonzero) -> void {
            if (level == m) {
                if (!any_nonzero)
                    return;
                if (!rational_primitive(spf, xs, w, primebuf))
                    return;
                ExactSize sz{0, 1, 1};
                for (int i = 0; i < m; ++i) {
                    if (xs[i] == 0)
                        continue;
                    ExactSize cand{iabs(xs[i]), w[i], 1};
                    if (cmp_exact_size(sz, cand) == std::strong_ordering::less)
                        sz = cand;
                }
                ++map[sz];
                return;
            }
            Int lo = (level == 0) ? lo0
                                  : ((w[level] % 2 == 1 && !sign_fixed)
                                         ? 0
                                         : -B[level]);
            Int hi = (level == 0) ? hi0 : B[level];
            for (Int v = lo; v <= hi; ++v) {
                if (v == 0 && occ == level)
                    continue;
                xs[level] = v;
                self(self, level + 1,
                     sign_fixed || (v != 0 && w[level] % 2 == 1),
                     any_nonzero || v != 0);
            }
            xs[level] = 0;
        };
        rec(rec, 0, false, false);
        return map;
    };

    Int lo0 = (w[0] % 2 == 1) ? 0 : -B[0];
    Int n = B[0] - lo0 + 1;
    int threads = resolve_threads(cfg);
    int chunks = static_cast<int>(std::min<Int>(n, threads * 4));
    if (chunks <= 1)
        return slice(lo0, B[0]);
    std::vector<std::future<SpectrumMap>> futs;
    Int step = n / chunks, extra = n % chunks, at = lo0;
    for (int c = 0; c < chunks; ++c) {
        Int len = step + (c < extra ? 1 : 0);
        Int a = at, b = at + len - 1;
        at += len;
        futs.push_back(std::async(std::launch::async,
                                  [a, b, &slice]() { return slice(a, b); }));
    }
    SpectrumMap map;
    for (auto & f : futs)
        merge_spectrum(map, f.get());
    return map;
}

/* ------------------------------------------------------------------ */
/* quadratic lattice machinery                                         */
/* ------------------------------------------------------------------ */

struct LatticePoint {
    Int x = 0, y = 0; // x + y*omega
    bool operator==(LatticePoint const &) const = default;
};

LatticePoint lp_mul(FieldData const & F, LatticePoint const & a,
                    LatticePoint const & b)
{
    // (x1 + y1 w)(x2 + y2 w), w^2 = tr*w - nm
    return {a.x * b.x - a.y * b.y * F.omega_norm,
            a.x * b.y + a.y * b.x + a.y * b.y * F.omega_trace};
}

FieldElement lp_elem(LatticePoint const & z)
{
    return {Rat(z.x), Rat(z.y)};
}

/* all points of the integral ideal L with Norm <= max_norm, zero included */
std::vector<LatticePoint> lattice_points_in_disk(FieldData const & F,
                                                 IdealRep const & L,
                                                 Int max_norm)
{
    invariant(ideal_is_integral(L), "lattice enumeration needs integral ideal");
    std::vector<LatticePoint> pts;
    if (max_norm < 0)
        return pts;
    Int s = L.scale.numerator(), a = L.a, b = L.b;
    Int R = max_norm / (s * s); // Q(u,v) <= R
    Int tr = F.omega_trace, nm = F.omega_norm;
    Int A = a * a;
    Int Bq = a * (2 * b + tr);
    Int C = b * b + tr * b + nm;
    Wide Dq = 4 * Wide(A) * C - Wide(Bq) * Bq; // = a^2 |disc| > 0
    auto Q = [&](Int u, Int v) {
        return Wide(A) * u * u + Wide(Bq) * u * v + Wide(C) * v * v;
    };
    Int vmax = static_cast<Int>(std::sqrt(
                   4.0 * static_cast<double>(A) * static_cast<double>(R) /
                   static_cast<double>(Dq))) +
               2;
    for (Int v = -vmax; v <= vmax; ++v) {
        // A u^2 + Bq u v + (C v^2 - R) <= 0
        double disc = static_cast<double>(Bq) * Bq * v * v -
                      4.0 * A * (static_cast<double>(C) * v * v - R);
        if (disc < 0)
            continue;
        double root = std::sqrt(disc);
        Int ulo = static_cast<Int>(
                      std::floor((-static_cast<double>(Bq) * v - root) /
                                 (2.0 * A))) -
                  1;
        Int uhi = static_cast<Int>(
                      std::ceil((-static_cast<double>(Bq) * v + root) /
                                (2.0 * A))) +
                  1;
        for (Int u = ulo; u <= uhi; ++u) {
            if (Q(u, v) > R)
                continue;
            pts.push_back({s * (u * a + v * b), s * v});
        }
    }
    return pts;
}

/* u^{w_i} as lattice points, per unit and coordinate */
std::vector<std::vector<LatticePoint>>
unit_power_table(FieldData const & F, Weight const & W)
{
    std::vector<std::vector<LatticePoint>> up;
    for (auto const & u : F.roots_of_unity) {
        LatticePoint base{u.a.numerator(), u.b.numerator()};
        std::vector<LatticePoint> row;
        for (int i = 0; i < W.size(); ++i) {
            LatticePoint p{1, 0};
            for (int j = 0; j < W[i]; ++j)
                p = lp_mul(F, p, base);
            row.push_back(p);
        }
        up.push_back(std::move(row));
    }
    return up;
}

/* tuple is the lexicographic minimum of its unit-group orbit */
bool unit_canonical(FieldData const & F,
                    std::vector<std::vector<LatticePoint>> const & upow,
                    std::vector<LatticePoint> const & t)
{
    for (size_t ui = 1; ui < upow.size(); ++ui) { // upow[0] is the identity
        int cmp = 0;
        for (size_t i = 0; i < t.size() && cmp == 0; ++i) {
            LatticePoint img = lp_mul(F, upow[ui][i], t[i]);
            if (img.x != t[i].x)
                cmp = img.x < t[i].x ? -1 : 1;
            else if (img.y != t[i].y)
                cmp = img.y < t[i].y ? -1 : 1;
        }
        if (cmp < 0)
            return false;
    }
    return true;
}

/* exact weighted content equal to A? */
bool content_equals(FieldData const & F, Weight const & W,
                    std::vector<LatticePoint> const & t, IdealRep const & A)
{
    bool all_ones = true;
    for (int i = 0; i < W.size(); ++i)
        all_ones &= W[i] == 1;
    if (all_ones) {
        // content = ideal sum of the coordinates
        bool have = false;
        IdealRep J;
        for (auto const & z : t) {
            if (z.x == 0 && z.y == 0)
                continue;
            IdealRep P = principal_ideal(F, lp_elem(z));
            J = have ? ideal_add(F, J, P) : P;
            have = true;
        }
        return have && J == A;
    }
    std::vector<FieldElement> elems;
    elems.reserve(t.size());
    for (auto const & z : t)
        elems.push_back(lp_elem(z));
    return weighted_content(F, elems, W) == A;
}

/* enumerate tuples over per-coordinate candidate lists; visit nonzero
 * tuples; parallel over the first list */
template <class MakeAcc, class Visit>
auto quad_tuples(std::vector<std::vector<LatticePoint>> const & lists,
                 int threads, MakeAcc && make_acc, Visit && visit)
{
    int m = static_cast<int>(lists.size());
    using Acc = decltype(make_acc());
    auto slice = [&](size_t lo, size_t hi) {
        Acc acc = make_acc();
        std::vector<LatticePoint> t(m);
        auto rec = [&](auto && self, int level, bool any_nonzero) -> void {
            if (level == m) {
                if (any_nonzero)
                    visit(acc, t);
                return;
            }
            for (auto const & z : lists[level]) {
                t[level] = z;
                self(self, level + 1, any_nonzero || !(z.x == 0 && z.y == 0));
            }
        };
        for (size_t i0 = lo; i0 <= hi; ++i0) {
            t[0] = lists[0][i0];
            rec(rec, 1, !(t[0].x == 0 && t[0].y == 0));
        }
        return acc;
    };
    size_t n = lists[0].size();
    std::vector<Acc> parts;
    if (n == 0)
        return std::vector<Acc>{};
    size_t chunks = std::min<size_t>(n, static_cast<size_t>(threads) * 4);
    std::vector<std::future<Acc>> futs;
    size_t step = n / chunks, extra = n % chunks, at = 0;
    for (size_t c = 0; c < chunks; ++c) {
        size_t len = step + (c < extra ? 1 : 0);
        size_t a = at, b = at + len - 1;
        at += len;
        futs.push_back(std::async(std::launch::async,
                                  [a, b, &slice]() { return slice(a, b); }));
    }
    for (auto & f : futs)
        parts.push_back(f.get());
    return parts;
}

std::vector<std::vector<LatticePoint>>
class_candidate_lists(FieldData const & F, Weight const & W,
                      IdealRep const & lattice_ideal, SizeBound const & bound,
                      Int norm_scale, std::optional<OpenConstraint> const & oc,
                      EnumConfig const & cfg)
{
    std::vector<std::vector<LatticePoint>> lists;
    long double visits = 1;
    for (int i = 0; i < W.size(); ++i) {
        IdealRep Li = ideal_pow(F, lattice_ideal, W[i]);
        Int nb = box_bound(bound, W[i], norm_scale);
        auto pts = lattice_points_in_disk(F, Li, nb);
        if (oc && oc->coord == i) {
            std::erase_if(pts, [](LatticePoint const & z) {
                return z.x == 0 && z.y == 0;
            });
        }
        visits *= static_cast<long double>(pts.size());
        lists.push_back(std::move(pts));
    }
    check_budget(visits, cfg.budget);
    return lists;
}

/* ------------------------------------------------------------------ */
/* Moebius sieve over Q (closed forms per content scale)                */
/* ------------------------------------------------------------------ */

u64 moebius_rational_count(Weight const & W, SizeBound const & bound,
                           std::optional<OpenConstraint> const & oc,
                           EnumConfig const & cfg)
{
    (void)cfg; // closed forms only
    int m = W.size();
    int occ = oc ? oc->coord : -1;
    if (oc)
        require(occ >= 0 && occ < m && oc->factor == 0,
                "open constraint names a missing coordinate");
    BigInt Pb = big_pow(BigInt(bound.base.numerator()),
                        static_cast<unsigned long long>(bound.num));
    BigInt Qb = big_pow(BigInt(bound.base.denominator()),
                        static_cast<unsigned long long>(bound.num));
    Int bmax = floor_power_big(Pb, Qb, bound.den);
    if (bmax <= 0)
        return 0;
    if (bmax > 10'000'000)
        throw budget_error("moebius sieve needs " + std::to_string(bmax) +
                           " content scales");
    auto mu = moebius_table(bmax);
    Wide total = 0;
    for (Int bb = 1; bb <= bmax; ++bb) {
        if (mu[bb] == 0)
            continue;
        // per-coordinate box for bound T / bb
        Wide all = 1, sub = 1, evens = 1, evens_sub = 1;
        bool wj_odd = false;
        for (int i = 0; i < m; ++i) {
            BigInt P = big_pow(BigInt(bound.base.numerator()),
                               static_cast<unsigned long long>(bound.num *
                                                               W[i]));
            BigInt Q =
                big_pow(BigInt(bound.base.denominator()),
                        static_cast<unsigned long long>(bound.num * W[i])) *
                big_pow(BigInt(bb),
                        static_cast<unsigned long long>(W[i] * bound.den));
            Int Bi = floor_power_big(P, Q, bound.den);
            Wide width = 2 * Wide(Bi) + 1;
            if (all > (Wide(1) << 100) / width)
                throw budget_error("moebius sieve box exceeds 64-bit counts");
            all *= width;
            if (i != occ)
                sub *= width;
            if (W[i] % 2 == 0) {
                evens *= width;
                if (i != occ)
                    evens_sub *= width;
            } else if (i == occ) {
                wj_odd = true;
            }
        }
        Wide V, F0;
        if (occ < 0) {
            V = all - 1;          // nonzero tuples in the box
            F0 = evens - 1;       // tuples fixed by the sign action
        } else {
            V = all - sub;        // tuples with the constrained coord nonzero
            F0 = wj_odd ? 0 : evens - evens_sub;
        }
        Wide orbits = (V + F0) / 2; // V+F0 is even
        total += mu[bb] > 0 ? orbits : -orbits;
    }
    invariant(total >= 0, "moebius sieve went negative");
    return static_cast<u64>(total);
}

} // namespace

/* ------------------------------------------------------------------ */
/* public entry points                                                 */
/* ------------------------------------------------------------------ */

CountResult count_points_rational(Weight const & W, SizeBound const & bound,
                                  std::optional<OpenConstraint> const & oc,
                                  EnumConfig const & cfg)
{
    auto t0 = Clock::now();
    CountResult r;
    r.count = rational_direct_count(W, bound, oc, cfg);
    r.wall_seconds = seconds_since(t0);
    return r;
}

CountResult count_points_quadratic(FieldData const & F, Weight const & W,
                                   SizeBound const & bound,
                                   std::optional<OpenConstraint> const & oc,
                                   EnumConfig const & cfg)
{
    require(!F.is_rational(), "count_points_quadratic needs a quadratic field");
    if (oc)
        require(oc->factor == 0 && oc->coord >= 0 && oc->coord < W.size(),
                "open constraint names a missing coordinate");
    auto t0 = Clock::now();
    CountResult r;
    auto upow = unit_power_table(F, W);
    int threads = resolve_threads(cfg);
    for (auto const & A : F.class_reps) {
        Int nA = ideal_norm(F, A).numerator();
        auto lists = class_candidate_lists(F, W, A, bound, nA, oc, cfg);
        auto parts = quad_tuples(
            lists, threads, []() { return u64(0); },
            [&](u64 & acc, std::vector<LatticePoint> const & t) {
                if (!unit_canonical(F, upow, t))
                    return;
                if (!content_equals(F, W, t, A))
                    return;
                ++acc;
            });
        u64 c = 0;
        for (u64 p : parts)
            c += p;
        r.per_class.push_back({A, c});
        r.count += c;
    }
    r.wall_seconds = seconds_since(t0);
    return r;
}

CountResult count_moebius_rational(Weight const & W, SizeBound const & bound,
                                   std::optional<OpenConstraint> const & oc,
                                   EnumConfig const & cfg)
{
    auto t0 = Clock::now();
    CountResult r;
    r.count = moebius_rational_count(W, bound, oc, cfg);
    r.wall_seconds = seconds_since(t0);
    return r;
}

CountResult count_moebius_quadratic(FieldData const & F, Weight const & W,
                                    SizeBound const & bound,
                                    EnumConfig const & cfg)
{
    require(!F.is_rational(),
            "count_moebius_quadratic needs a quadratic field");
    auto t0 = Clock::now();
    CountResult r;
    auto upow = unit_power_table(F, W);
    int threads = resolve_threads(cfg);
    // content scales B run over integral ideals of norm <= T
    BigInt Pb = big_pow(BigInt(bound.base.numerator()),
                        static_cast<unsigned long long>(bound.num));
    BigInt Qb = big_pow(BigInt(bound.base.denominator()),
                        static_cast<unsigned long long>(bound.num));
    Int tcap = floor_power_big(Pb, Qb, bound.den);
    auto ideals = integral_ideals_up_to(F, tcap);
    for (auto const & A : F.class_reps) {
        Int nA = ideal_norm(F, A).numerator();
        long long acc = 0;
        for (auto const & Bid : ideals) {
            int mu = moebius_ideal(F, Bid);
            if (mu == 0)
                continue;
            IdealRep AB = ideal_mul(F, A, Bid);
            auto lists =
                class_candidate_lists(F, W, AB, bound, nA, std::nullopt, cfg);
            auto parts = quad_tuples(
                lists, threads, []() { return u64(0); },
                [&](u64 & c, std::vector<LatticePoint> const & t) {
                    if (unit_canonical(F, upow, t))
                        ++c;
                });
            u64 term = 0;
            for (u64 p : parts)
                term += p;
            acc += mu * static_cast<long long>(term);
        }
        invariant(acc >= 0, "moebius sieve went negative");
        r.per_class.push_back({A, static_cast<u64>(acc)});
        r.count += static_cast<u64>(acc);
    }
    r.wall_seconds = seconds_since(t0);
    return r;
}

std::vector<SizeClass> size_spectrum(FieldData const & F, Weight const & W,
                                     SizeBound const & bound,
                                     std::optional<OpenConstraint> const & oc,
                                     EnumConfig const & cfg)
{
    SpectrumMap map;
    if (F.is_rational()) {
        map = rational_spectrum(W, bound, oc, cfg);
    } else {
        auto upow = unit_power_table(F, W);
        int threads = resolve_threads(cfg);
        for (auto const & A : F.class_reps) {
            Int nA = ideal_norm(F, A).numerator();
            auto lists = class_candidate_lists(F, W, A, bound, nA, oc, cfg);
            auto parts = quad_tuples(
                lists, threads, []() { return SpectrumMap(); },
                [&](SpectrumMap & acc, std::vector<LatticePoint> const & t) {
                    if (!unit_canonical(F, upow, t))
                        return;
                    if (!content_equals(F, W, t, A))
                        return;
                    ExactSize sz{0, 1, nA};
                    for (int i = 0; i < W.size(); ++i) {
                        auto const & z = t[static_cast<size_t>(i)];
                        if (z.x == 0 && z.y == 0)
                            continue;
                        Wide n =
                            Wide(z.x) * z.x + Wide(F.omega_trace) * z.x * z.y +
                            Wide(F.omega_norm) * z.y * z.y;
                        ExactSize cand{static_cast<Int>(n), W[i], nA};
                        if (cmp_exact_size(sz, cand) ==
                            std::strong_ordering::less)
                            sz = cand;
                    }
                    ++acc[sz];
                });
            for (auto const & p : parts)
                merge_spectrum(map, p);
        }
    }
    std::vector<SizeClass> out;
    out.reserve(map.size());
    for (auto const & [k, mult] : map) {
        AlgebraicReal v = AlgebraicReal::root(k.n, 1, k.w) *
                          AlgebraicReal::from_rational(Rat(1, k.den));
        out.push_back({v, mult});
    }
    return out;
}

CountResult count_product(FieldData const & F,
                          std::vector<Weight> const & weights,
                          DivisorClass const & D, Rat const & T,
                          std::optional<OpenConstraint> const & oc,
                          EnumConfig const & cfg)
{
    auto t0 = Clock::now();
    size_t k = weights.size();
    require(k >= 1, "product count needs at least one factor");
    require(D.exponents.size() == k,
            "divisor length does not match the number of factors");
    for (Int a : D.exponents)
        require(a >= 1, "counting needs a divisor positive on every factor");
    require(T > 0, "bound must be positive");

    // largest |W_i|/a_i outermost
    std::vector<size_t> order(k);
    for (size_t i = 0; i < k; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return Rat(weights[x].total(), D.exponents[x]) >
               Rat(weights[y].total(), D.exponents[y]);
    });

    struct FactorSpec {
        std::vector<AlgebraicReal> value; // size^{a_i}, ascending
        std::vector<u64> cumulative;      // multiplicities, prefix sums
    };
    std::vector<FactorSpec> specs;
    for (size_t pos = 0; pos < k; ++pos) {
        size_t i = order[pos];
        std::optional<OpenConstraint> oci;
        if (oc && oc->factor == static_cast<int>(i))
            oci = OpenConstraint{0, oc->coord};
        SizeBound bi{T, 1, D.exponents[i]};
        auto spectrum = size_spectrum(F, weights[i], bi, oci, cfg);
        FactorSpec fs;
        u64 run = 0;
        for (auto const & sc : spectrum) {
            fs.value.push_back(sc.value.pow(D.exponents[i], 1));
            run += sc.multiplicity;
            fs.cumulative.push_back(run);
        }
        specs.push_back(std::move(fs));
    }
    if (oc)
        require(oc->factor >= 0 && oc->factor < static_cast<int>(k),
                "open constraint names a missing factor");

    AlgebraicReal target = AlgebraicReal::from_rational(T);
    auto rec = [&](auto && self, size_t d, AlgebraicReal const & acc) -> u64 {
        auto const & fs = specs[d];
        if (fs.value.empty())
            return 0;
        if (d + 1 == k) {
            // count entries with acc * value <= T
            size_t lo = 0, hi = fs.value.size(); // first index failing
            while (lo < hi) {
                size_t mid = (lo + hi) / 2;
                if ((acc * fs.value[mid]).compare(target) !=
                    std::strong_ordering::greater)
                    lo = mid + 1;
                else
                    hi = mid;
            }
            return lo == 0 ? 0 : fs.cumulative[lo - 1];
        }
        u64 total = 0;
        u64 prev = 0;
        for (size_t j = 0; j < fs.value.size(); ++j) {
            AlgebraicReal v = acc * fs.value[j];
            if (v.compare(target) == std::strong_ordering::greater)
                break;
            u64 mult = fs.cumulative[j] - prev;
            prev = fs.cumulative[j];
            total += mult * self(self, d + 1, v);
        }
        return total;
    };
    CountResult r;
    r.count = rec(rec, 0, AlgebraicReal{});
    r.wall_seconds = seconds_since(t0);
    return r;
}

CountResult run_count(FieldData const & F, CountQuery const & q,
                      EnumConfig const & cfg)
{
    require(!q.weights.empty(), "query has no weights");
    require(q.bound > 0, "bound must be positive");
    require(q.divisor.exponents.size() == q.weights.size(),
            "divisor length does not match the number of factors");
    if (q.weights.size() == 1) {
        Int e = q.divisor.exponents.at(0);
        require(e >= 1, "divisor exponent must be >= 1");
        SizeBound b{q.bound, 1, e};
        if (F.is_rational())
            return q.method == CountMethod::direct
                       ? count_points_rational(q.weights[0], b,
                                               q.open_constraint, cfg)
                       : count_moebius_rational(q.weights[0], b,
                                                q.open_constraint, cfg);
        if (q.method == CountMethod::direct)
            return count_points_quadratic(F, q.weights[0], b,
                                          q.open_constraint, cfg);
        require(!q.open_constraint,
                "open constraints are not supported by the quadratic sieve");
        return count_moebius_quadratic(F, q.weights[0], b, cfg);
    }
    require(q.method == CountMethod::direct,
            "the moebius method applies to single spaces only");
    return count_product(F, q.weights, q.divisor, q.bound, q.open_constraint,
                         cfg);
}

CountSeries sweep_counts(FieldData const & F, CountQuery const & q,
                         std::vector<Rat> const & grid,
                         EnumConfig const & cfg)
{
    require(!grid.empty(), "empty sweep grid");
    for (size_t i = 1; i < grid.size(); ++i)
        require(grid[i - 1] < grid[i], "sweep grid must be increasing");
    CountSeries series;
    for (Rat const & T : grid) {
        CountQuery qt = q;
        qt.bound = T;
        series.rows.emplace_back(T, run_count(F, qt, cfg));
    }
    for (size_t i = 1; i < series.rows.size(); ++i)
        invariant(series.rows[i - 1].second.count <=
                      series.rows[i].second.count,
                  "counts must be nondecreasing in T");
    return series;
}

std::vector<Rat> geometric_grid(Rat const & t0, Rat const & tmax,
                                Rat const & ratio)
{
    require(t0 > 0 && tmax >= t0 && ratio > 1,
            "grid needs 0 < T0 <= Tmax and ratio > 1");
    std::vector<Rat> grid;
    for (Rat v = t0; v <= tmax; v *= ratio)
        grid.push_back(v);
    return grid;
}

Rat parse_decimal_rat(std::string const & text)
{
    std::string s = text;
    require(!s.empty(), "empty number");
    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    Int frac = 0, expo = 0;
    bool any = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        digits += s[i++];
        any = true;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i++];
            ++frac;
            any = true;
        }
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            eneg = s[i] == '-';
            ++i;
        }
        std::string ed;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ed += s[i++];
        require(!ed.empty() && ed.size() <= 3, "bad exponent in '" + text + "'");
        expo = std::stoll(ed);
        if (eneg)
            expo = -expo;
    }
    require(any && i == s.size(), "bad number '" + text + "'");
    require(digits.size() <= 18, "number '" + text + "' has too many digits");
    Int n = digits.empty() ? 0 : std::stoll(digits);
    Rat r(n, 1);
    Int shift = expo - frac;
    while (shift > 0) {
        r *= 10;
        --shift;
    }
    while (shift < 0) {
        r /= 10;
        ++shift;
    }
    return neg ? -r : r;
}

} // namespace wps
