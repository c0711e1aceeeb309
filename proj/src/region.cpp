#include "divsum/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <vector>

// Region subdivision ("tangent, tangent, chop, recurse") on an explicit LIFO
// work stack. The engine is written once against an integer-ops policy and
// instantiated twice: exact GMP arithmetic, and a machine-word path that
// keeps region state in 64 bits with 128-bit intermediates. The word path's
// checked operations throw on overflow so the affected work item can be
// escalated to the GMP instantiation.

namespace divsum {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct WordOverflow {};

u128 sqrt_floor_u128(u128 x) {
    if (x == 0) return 0;
    // Manual conversion: avoids the soft-float u128 -> long double call.
    long double approx = static_cast<long double>(static_cast<u64>(x >> 64)) *
                             0x1p64L +
                         static_cast<long double>(static_cast<u64>(x));
    u128 r = static_cast<u128>(sqrtl(approx));
    if (r >> 64) r = (static_cast<u128>(1) << 64) - 1;
    while (r > 0 && r * r > x) --r;
    for (;;) {
        u128 next = r + 1;
        if ((next >> 64) != 0 || next * next > x) break;
        r = next;
    }
    return r;
}

u128 div_u128_u64(u128 a, u64 b) {
#if defined(__x86_64__)
    // Single divq when the quotient fits a word (the common case here:
    // divisors are small slope products, quotients are coordinates).
    u64 hi = static_cast<u64>(a >> 64);
    if (hi < b) {
        u64 q, r;
        asm("divq %4"
            : "=a"(q), "=d"(r)
            : "a"(static_cast<u64>(a)), "d"(hi), "rm"(b));
        return q;
    }
#endif
    return a / b;
}

// Narrow (64-bit) checked state arithmetic with wide (128-bit) exact
// products. Anything that cannot be represented throws WordOverflow and the
// caller re-runs the work item in exact arithmetic.
struct WordOps {
    using Int = u64;
    using Wide = u128;
    static Int add(Int a, Int b) {
        Int r;
        if (__builtin_add_overflow(a, b, &r)) throw WordOverflow{};
        return r;
    }
    static Int sub(Int a, Int b) {
        if (a < b) throw WordOverflow{};
        return a - b;
    }
    static Int mul(Int a, Int b) {
        Int r;
        if (__builtin_mul_overflow(a, b, &r)) throw WordOverflow{};
        return r;
    }
    static Wide wmul(Int a, Int b) {
        return static_cast<Wide>(a) * b;  // exact: 64x64 -> 128
    }
    static Wide wmul_wide(const Wide& a, Int b) {
        Wide r;
        if (__builtin_mul_overflow(a, static_cast<Wide>(b), &r))
            throw WordOverflow{};
        return r;
    }
    static Wide wadd(const Wide& a, const Wide& b) {
        Wide r = a + b;
        if (r < a) throw WordOverflow{};
        return r;
    }
    static Wide wsub(const Wide& a, const Wide& b) {
        if (a < b) throw WordOverflow{};
        return a - b;
    }
    static Wide wdiv(const Wide& a, Int b) { return div_u128_u64(a, b); }
    static Int narrow(const Wide& a) {
        if (a >> 64) throw WordOverflow{};
        return static_cast<Int>(a);
    }
    static Wide widen(Int a) { return a; }
    static Wide sqrt_floor(const Wide& x) { return sqrt_floor_u128(x); }
    static Wide sqrt_ceil(const Wide& x) {
        Wide r = sqrt_floor_u128(x);
        return r * r == x ? r : r + 1;
    }
    // fx * fy <= n without forming an overflowing product.
    static bool le_product(const Wide& fx, const Wide& fy, Int n) {
        Wide p;
        if (__builtin_mul_overflow(fx, fy, &p)) return false;
        return p <= static_cast<Wide>(n);
    }
};

struct MpzOps {
    using Int = mpz_class;
    using Wide = mpz_class;
    static Int add(const Int& a, const Int& b) { return a + b; }
    static Int sub(const Int& a, const Int& b) { return sub_nonneg(a, b); }
    static Int mul(const Int& a, const Int& b) { return a * b; }
    static Wide wmul(const Int& a, const Int& b) { return a * b; }
    static Wide wmul_wide(const Wide& a, const Int& b) { return a * b; }
    static Wide wadd(const Wide& a, const Wide& b) { return a + b; }
    static Wide wsub(const Wide& a, const Wide& b) { return sub_nonneg(a, b); }
    static Wide wdiv(const Wide& a, const Int& b) { return a / b; }
    static Int narrow(const Wide& a) { return a; }
    static Wide widen(const Int& a) { return a; }
    static Wide sqrt_floor(const Wide& x) { return isqrt_floor(x); }
    static Wide sqrt_ceil(const Wide& x) { return isqrt_ceil(x); }
    static bool le_product(const Wide& fx, const Wide& fy, const Int& n) {
        return fx * fy <= n;
    }
};

#define I_ALIAS(Ops)                              \
    using I [[maybe_unused]] = typename Ops::Int; \
    using W [[maybe_unused]] = typename Ops::Wide

template <class I>
struct RegionT {
    I w, h;
    I a1, b1, c1;
    I a2, b2, c2;
};

Region to_region(const RegionT<u64>& r) {
    return Region{from_u64(r.w),  from_u64(r.h),  from_u64(r.a1),
                  from_u64(r.b1), from_u64(r.c1), from_u64(r.a2),
                  from_u64(r.b2), from_u64(r.c2)};
}

Region to_region(const RegionT<mpz_class>& r) {
    return Region{r.w, r.h, r.a1, r.b1, r.c1, r.a2, r.b2, r.c2};
}

RegionT<mpz_class> to_mpz_region(const RegionT<u64>& r) {
    return {from_u64(r.w),  from_u64(r.h),  from_u64(r.a1),
            from_u64(r.b1), from_u64(r.c1), from_u64(r.a2),
            from_u64(r.b2), from_u64(r.c2)};
}

thread_local std::vector<testing::TraceEntry>* g_trace = nullptr;

// True iff the box point (u,v) lies on or under the hyperbola, i.e. both
// factors of H are strictly positive and their product is <= n.
template <class Ops>
bool under_curve(const RegionT<typename Ops::Int>& r,
                 const typename Ops::Int& u, const typename Ops::Int& v,
                 const typename Ops::Int& n) {
    I_ALIAS(Ops);
    W s1 = Ops::wmul(r.b2, Ops::add(u, r.c1));
    W s2 = Ops::wmul(r.b1, Ops::add(v, r.c2));
    if (s1 <= s2) return false;
    W s3 = Ops::wmul(r.a1, Ops::add(v, r.c2));
    W s4 = Ops::wmul(r.a2, Ops::add(u, r.c1));
    if (s3 <= s4) return false;
    return Ops::le_product(s1 - s2, s3 - s4, n);
}

template <class Ops>
typename Ops::Int tri(const typename Ops::Int& i) {
    I_ALIAS(Ops);
    return Ops::narrow(Ops::wdiv(Ops::wmul(i, Ops::add(i, I(1))), I(2)));
}

// floor(u_tan) saturated at 0; 0 signals the degenerate tangent case.
// q1 = a1b2 + b1a2 and ab = a1b1 are precomputed by the caller.
template <class Ops>
typename Ops::Int u_tan_impl(const RegionT<typename Ops::Int>& r,
                             const typename Ops::Int& q1,
                             const typename Ops::Int& ab,
                             const typename Ops::Int& a3,
                             const typename Ops::Int& b3,
                             const typename Ops::Int& n, RunStats& stats) {
    I_ALIAS(Ops);
    I q = Ops::add(q1, Ops::mul(I(2), ab));
    I d = Ops::mul(a3, b3);
    // floor(q^2 * n / d) split so the word path never forms q^2 * n.
    W qq = Ops::wmul(q, q);
    I quot = Ops::narrow(Ops::wdiv(qq, d));
    I rem = Ops::narrow(qq - Ops::wmul(quot, d));
    W t = Ops::wadd(Ops::wmul(quot, n), Ops::wdiv(Ops::wmul(rem, n), d));
    ++stats.sqrt_calls;
    I root = Ops::narrow(Ops::sqrt_floor(t));
    if (root <= r.c1) return I(0);
    return root - r.c1;
}

// Shared core of v_floor: uc = u+c1 with q1 = a1b2+b1a2, f4n = 4a1b1n and
// den = 2a1b1 precomputed by the caller.
template <class Ops>
typename Ops::Int v_floor_core(const typename Ops::Int& uc,
                               const typename Ops::Int& q1,
                               const typename Ops::Wide& f4n,
                               const typename Ops::Int& den,
                               const typename Ops::Int& c2, RunStats& stats) {
    I_ALIAS(Ops);
    W disc = Ops::wsub(Ops::wmul(uc, uc), f4n);
    ++stats.sqrt_calls;
    W root = Ops::sqrt_ceil(disc);
    W num = Ops::wsub(Ops::wmul(q1, uc), root);
    ++stats.div_calls;
    return Ops::sub(Ops::narrow(Ops::wdiv(num, den)), c2);
}

template <class Ops>
typename Ops::Int v_floor_impl(const RegionT<typename Ops::Int>& r,
                               const typename Ops::Int& u,
                               const typename Ops::Int& n, RunStats& stats) {
    I_ALIAS(Ops);
    I q1 = Ops::add(Ops::mul(r.a1, r.b2), Ops::mul(r.b1, r.a2));
    I ab = Ops::mul(r.a1, r.b1);
    W f4n = Ops::wmul(Ops::mul(I(4), ab), n);
    return v_floor_core<Ops>(Ops::add(u, r.c1), q1, f4n,
                             Ops::mul(I(2), ab), r.c2, stats);
}

template <class Ops>
typename Ops::Int u_floor_impl(const RegionT<typename Ops::Int>& r,
                               const typename Ops::Int& v,
                               const typename Ops::Int& n, RunStats& stats) {
    I_ALIAS(Ops);
    I vc = Ops::add(v, r.c2);
    I q1 = Ops::add(Ops::mul(r.a1, r.b2), Ops::mul(r.b1, r.a2));
    I ab = Ops::mul(r.a2, r.b2);
    W disc = Ops::wsub(Ops::wmul(vc, vc), Ops::wmul(Ops::mul(I(4), ab), n));
    ++stats.sqrt_calls;
    W root = Ops::sqrt_ceil(disc);
    W num = Ops::wsub(Ops::wmul(q1, vc), root);
    ++stats.div_calls;
    // Final subtraction is c1, by the subscript-exchange symmetry.
    return Ops::sub(Ops::narrow(Ops::wdiv(num, Ops::mul(I(2), ab))), r.c1);
}

// Lattice points inside the tangent polygon: full diagonals Delta(v6-1)
// minus the part past the P4 ray, plus the part under the P5 ray. The
// Delta arguments are v4-1 and v5; the v4 = 0 polygon has an empty cut.
template <class Ops>
typename Ops::Int s_n_impl(const typename Ops::Int& v6,
                           const typename Ops::Int& v4,
                           const typename Ops::Int& v5) {
    I_ALIAS(Ops);
    I s = Ops::add(tri<Ops>(Ops::sub(v6, I(1))), tri<Ops>(v5));
    if (v4 >= I(1)) s = Ops::sub(s, tri<Ops>(Ops::sub(v4, I(1))));
    return s;
}

// One square root and one division per column; A = (p1+i)^2 - 2rn,
// B = (p1+i)q and C = 2(p1+i)-1 advance by additions alone.
template <class Ops>
typename Ops::Int s_manual_impl(const RegionT<typename Ops::Int>& r,
                                const typename Ops::Int& n, Axis axis,
                                RunStats& stats) {
    I_ALIAS(Ops);
    const I& i_max = axis == Axis::U ? r.w : r.h;
    const I& p1 = axis == Axis::U ? r.c1 : r.c2;
    const I& p2 = axis == Axis::U ? r.c2 : r.c1;
    if (i_max <= I(1)) return I(0);
    I q = Ops::add(Ops::mul(r.a1, r.b2), Ops::mul(r.b1, r.a2));
    I rr = axis == Axis::U ? Ops::mul(I(2), Ops::mul(r.a1, r.b1))
                           : Ops::mul(I(2), Ops::mul(r.a2, r.b2));
    I p = Ops::add(p1, I(1));
    W a = Ops::wsub(Ops::wmul(p, p), Ops::wmul(Ops::mul(I(2), rr), n));
    W b = Ops::wmul(q, p);
    I c = Ops::sub(Ops::mul(I(2), p), I(1));
    I s = I(0);
    for (I i(1); i < i_max; i = Ops::add(i, I(1))) {
        ++stats.manual_columns;
        ++stats.sqrt_calls;
        ++stats.div_calls;
        s = Ops::add(
            s, Ops::narrow(Ops::wdiv(Ops::wsub(b, Ops::sqrt_ceil(a)), rr)));
        c = Ops::add(c, I(2));
        a = Ops::wadd(a, Ops::widen(c));
        b = Ops::wadd(b, Ops::widen(q));
    }
    return Ops::sub(s, Ops::mul(Ops::sub(i_max, I(1)), p2));
}

// Process one work item: trim the first lattice row/column if fully under
// the curve, count small regions manually, otherwise chop off the tangent
// polygon and push the two Farey-mediant children. Work-stack pushes happen
// last, after every potentially-throwing operation, so an overflow never
// leaves half a split behind.
template <class Ops>
typename Ops::Int step(RegionT<typename Ops::Int> r,
                       const typename Ops::Int& n,
                       const typename Ops::Int& c2cut, RunStats& stats,
                       std::vector<RegionT<typename Ops::Int>>& stack,
                       testing::TraceEntry* ent) {
    I_ALIAS(Ops);
    I total = I(0);
    if (ent) ent->terminal = true;
    // Trim until both outer corner probes are past the curve; V and U are
    // monotone on the near branch, so a corner probe under the curve means
    // the whole first row/column is, and the manual sums below (which stop
    // one short of the box edge) stay exact after any number of trims.
    for (;;) {
        if (r.w == 0 || r.h == 0) return total;
        if (under_curve<Ops>(r, r.w, I(1), n)) {
            total = Ops::add(total, r.w);
            r.c2 = Ops::add(r.c2, I(1));
            r.h = Ops::sub(r.h, I(1));
            continue;
        }
        if (under_curve<Ops>(r, I(1), r.h, n)) {
            total = Ops::add(total, r.h);
            r.c1 = Ops::add(r.c1, I(1));
            r.w = Ops::sub(r.w, I(1));
            continue;
        }
        break;
    }
    bool w_small = r.w <= c2cut;
    bool h_small = r.h <= c2cut;
    if (w_small || h_small) {
        Axis axis = (w_small && h_small) ? (r.w <= r.h ? Axis::U : Axis::V)
                                         : (w_small ? Axis::U : Axis::V);
        return Ops::add(total, s_manual_impl<Ops>(r, n, axis, stats));
    }
    I a3 = Ops::add(r.a1, r.a2);
    I b3 = Ops::add(r.b1, r.b2);
    I ab = Ops::mul(r.a1, r.b1);
    I q1 = Ops::add(Ops::mul(r.a1, r.b2), Ops::mul(r.b1, r.a2));
    I u4 = u_tan_impl<Ops>(r, q1, ab, a3, b3, n, stats);
    if (u4 == 0 || u4 >= r.w) {
        // Degenerate tangent point; direct summation stays exact.
        Axis axis = r.w <= r.h ? Axis::U : Axis::V;
        return Ops::add(total, s_manual_impl<Ops>(r, n, axis, stats));
    }
    W f4n = Ops::wmul(Ops::mul(I(4), ab), n);
    I den = Ops::mul(I(2), ab);
    I uc4 = Ops::add(u4, r.c1);
    I v4 = v_floor_core<Ops>(uc4, q1, f4n, den, r.c2, stats);
    I u5 = Ops::add(u4, I(1));
    I v5 = v_floor_core<Ops>(Ops::add(uc4, I(1)), q1, f4n, den, r.c2, stats);
    I v6 = Ops::add(u4, v4);
    I u7 = Ops::add(u5, v5);
    total = Ops::add(total, s_n_impl<Ops>(v6, v4, v5));
    I c12 = Ops::add(r.c1, r.c2);
    RegionT<I> left{u4,   Ops::sub(r.h, v6),  r.a1, r.b1,
                    r.c1, a3,                 b3,   Ops::add(c12, v6)};
    RegionT<I> right{Ops::sub(r.w, u7), v5,   a3,   b3,
                     Ops::add(c12, u7), r.a2, r.b2, r.c2};
    // Empty children contribute nothing; don't queue them. Defer the larger
    // child and process the smaller first: the processed side shrinks
    // geometrically, so pending siblings stay logarithmic.
    bool left_empty = left.w == 0 || left.h == 0;
    bool right_empty = right.w == 0 || right.h == 0;
    if (left_empty && right_empty) return total;
    if (ent) ent->terminal = false;
    if (left_empty) {
        stack.push_back(std::move(right));
    } else if (right_empty) {
        stack.push_back(std::move(left));
    } else if (Ops::wmul(left.w, left.h) <= Ops::wmul(right.w, right.h)) {
        stack.push_back(std::move(right));
        stack.push_back(std::move(left));
    } else {
        stack.push_back(std::move(left));
        stack.push_back(std::move(right));
    }
    return total;
}

template <class Ops>
mpz_class run_tree(RegionT<typename Ops::Int> root,
                   const typename Ops::Int& n,
                   const typename Ops::Int& c2cut, RunStats& stats,
                   u64 depth_limit, u64 base_depth) {
    I_ALIAS(Ops);
    std::vector<RegionT<I>> stack;
    stack.push_back(std::move(root));
    mpz_class total = 0;
    auto* sink = g_trace;
    while (!stack.empty()) {
        RegionT<I> cur = std::move(stack.back());
        stack.pop_back();
        u64 depth = base_depth + stack.size() + 1;
        stats.max_stack_depth = std::max(stats.max_stack_depth, depth);
        if (depth > depth_limit)
            throw std::runtime_error(
                "region_count: work stack depth bound exceeded");
        testing::TraceEntry* ent = nullptr;
        if (sink) {
            sink->push_back({to_region(cur), false});
            ent = &sink->back();
        }
        ++stats.regions_processed;
        if constexpr (std::is_same_v<Ops, WordOps>) {
            // Batch word-sized contributions; fold into the exact total
            // rarely to keep the inner loop free of mpz traffic.
            u128 batch = 0;
            try {
                for (;;) {
                    u64 part = step<Ops>(cur, n, c2cut, stats, stack, ent);
                    batch += part;  // < 2^64 each; cannot overflow here
                    if (batch >> 96 || stack.empty()) break;
                    cur = std::move(stack.back());
                    stack.pop_back();
                    depth = base_depth + stack.size() + 1;
                    stats.max_stack_depth =
                        std::max(stats.max_stack_depth, depth);
                    if (depth > depth_limit)
                        throw std::runtime_error(
                            "region_count: work stack depth bound exceeded");
                    ent = nullptr;
                    if (sink) {
                        sink->push_back({to_region(cur), false});
                        ent = &sink->back();
                    }
                    ++stats.regions_processed;
                }
                total += from_u128(batch);
            } catch (const WordOverflow&) {
                // Undo this item's bookkeeping and redo it exactly.
                total += from_u128(batch);
                --stats.regions_processed;
                if (sink) sink->pop_back();
                total += run_tree<MpzOps>(to_mpz_region(cur), from_u64(n),
                                          from_u64(c2cut), stats, depth_limit,
                                          base_depth + stack.size());
            }
        } else {
            total += step<Ops>(cur, n, c2cut, stats, stack, ent);
        }
        stats.max_stack_depth =
            std::max(stats.max_stack_depth, base_depth + stack.size());
    }
    return total;
}

void validate_region(const Region& r) {
    DIVSUM_ASSERT(region_unimodular(r));
    DIVSUM_ASSERT(region_x0(r) >= 1 && region_y0(r) >= 1);
}

bool word_representable(const Region& r, const Natural& n) {
    return fits_u64(n) && fits_u64(r.w) && fits_u64(r.h) && fits_u64(r.a1) &&
           fits_u64(r.b1) && fits_u64(r.c1) && fits_u64(r.a2) &&
           fits_u64(r.b2) && fits_u64(r.c2);
}

}  // namespace

Natural h_eval(const Region& region, const Natural& u, const Natural& v) {
    Natural fx = sub_nonneg(region.b2 * (u + region.c1),
                            region.b1 * (v + region.c2));
    Natural fy = sub_nonneg(region.a1 * (v + region.c2),
                            region.a2 * (u + region.c1));
    return fx * fy;
}

std::pair<Natural, Natural> uv_to_xy(const Region& region, const Natural& u,
                                     const Natural& v) {
    Natural x = sub_nonneg(region.b2 * (u + region.c1),
                           region.b1 * (v + region.c2));
    Natural y = sub_nonneg(region.a1 * (v + region.c2),
                           region.a2 * (u + region.c1));
    return {x, y};
}

std::pair<Natural, Natural> xy_to_uv(const Region& region, const Natural& x,
                                     const Natural& y) {
    Natural u = sub_nonneg(region.a1 * x + region.b1 * y, region.c1);
    Natural v = sub_nonneg(region.a2 * x + region.b2 * y, region.c2);
    return {u, v};
}

Natural u_tan(const Region& region, const Natural& n) {
    Natural q = region.a1 * region.b2 + region.b1 * region.a2 +
                2 * region.a1 * region.b1;
    Natural d = (region.a1 + region.a2) * (region.b1 + region.b2);
    Natural root = isqrt_floor(q * q * n / d);
    return sub_nonneg(root, region.c1);
}

Natural v_floor(const Region& region, const Natural& u, const Natural& n) {
    Natural uc = u + region.c1;
    Natural shift = 4 * region.a1 * region.b1 * n;
    if (uc * uc < shift)
        throw std::domain_error("v_floor: curve does not reach this column");
    Natural root = isqrt_ceil(uc * uc - shift);
    Natural num = sub_nonneg(
        (region.a1 * region.b2 + region.b1 * region.a2) * uc, root);
    return sub_nonneg(num / (2 * region.a1 * region.b1), region.c2);
}

Natural u_floor(const Region& region, const Natural& v, const Natural& n) {
    Natural vc = v + region.c2;
    Natural shift = 4 * region.a2 * region.b2 * n;
    if (vc * vc < shift)
        throw std::domain_error("u_floor: curve does not reach this row");
    Natural root = isqrt_ceil(vc * vc - shift);
    Natural num = sub_nonneg(
        (region.a1 * region.b2 + region.b1 * region.a2) * vc, root);
    return sub_nonneg(num / (2 * region.a2 * region.b2), region.c1);
}

Natural s_n_polygon(const Natural& v6, const Natural& u7, const Natural& u4,
                    const Natural& v5) {
    // Delta-difference count with negative arguments clamped to empty: the
    // three-branch diagonal form overcounts when floor(V) is locally flat
    // or drops by more than two across the tangent pair.
    DIVSUM_ASSERT(u7 == u4 + 1 + v5);
    Natural v4 = sub_nonneg(v6, u4);
    Natural s = triangle(sub_nonneg(v6, 1)) + triangle(v5);
    if (v4 >= 1) s -= triangle(v4 - 1);
    return s;
}

Natural s_manual(const Region& region, const Natural& n, Axis axis,
                 RunStats& stats) {
    RegionT<mpz_class> r{region.w,  region.h,  region.a1, region.b1,
                         region.c1, region.a2, region.b2, region.c2};
    return s_manual_impl<MpzOps>(r, n, axis, stats);
}

Natural region_count(const Region& region, const Natural& n,
                     const Config& config, RunStats& stats) {
    validate_region(region);
    u64 depth_limit = 4 * mpz_sizeinbase(n.get_mpz_t(), 2) + 64;
    if (word_representable(region, n) && fits_u64(config.c2)) {
        RegionT<u64> root{to_u64(region.w),  to_u64(region.h),
                          to_u64(region.a1), to_u64(region.b1),
                          to_u64(region.c1), to_u64(region.a2),
                          to_u64(region.b2), to_u64(region.c2)};
        return run_tree<WordOps>(root, to_u64(n), to_u64(config.c2), stats,
                                 depth_limit, 0);
    }
    RegionT<mpz_class> root{region.w,  region.h,  region.a1, region.b1,
                            region.c1, region.a2, region.b2, region.c2};
    return run_tree<MpzOps>(std::move(root), n, config.c2, stats, depth_limit,
                            0);
}

namespace testing {

RegionTraceScope::RegionTraceScope(std::vector<TraceEntry>& sink)
    : previous_(g_trace) {
    g_trace = &sink;
}

RegionTraceScope::~RegionTraceScope() { g_trace = previous_; }

}  // namespace testing

}  // namespace divsum
