#include "spindle/repsets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "spindle/effort.hpp"

namespace spindle {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

namespace {

bool is_prime(std::int64_t x) {
    if (x < 2) return false;
    for (std::int64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) % static_cast<unsigned __int128>(p));
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

std::int64_t inverse(std::int64_t a, std::int64_t p) { return powmod(a, p - 2, p); }

// det of a p x p matrix over F_p, destroys the input.
std::int64_t det_mod(std::vector<std::vector<std::int64_t>>& m, std::int64_t p) {
    const int k = static_cast<int>(m.size());
    std::int64_t det = 1;
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int row = col; row < k; ++row)
            if (m[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        if (pivot == -1) return 0;
        if (pivot != col) {
            std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(col)]);
            det = p - det;
            if (det == p) det = 0;
        }
        std::int64_t pv = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det = mulmod(det, pv, p);
        std::int64_t inv = inverse(pv, p);
        for (int row = col + 1; row < k; ++row) {
            std::int64_t factor = mulmod(m[static_cast<size_t>(row)][static_cast<size_t>(col)], inv, p);
            if (factor == 0) continue;
            for (int c2 = col; c2 < k; ++c2) {
                std::int64_t v = m[static_cast<size_t>(row)][static_cast<size_t>(c2)] -
                                 mulmod(factor, m[static_cast<size_t>(col)][static_cast<size_t>(c2)], p);
                if (v < 0) v += p;
                m[static_cast<size_t>(row)][static_cast<size_t>(c2)] = v;
            }
        }
    }
    return det;
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<std::vector<int>> dedup_members(const std::vector<std::vector<int>>& members) {
    std::vector<std::vector<int>> out;
    std::set<std::vector<int>> seen;
    for (const auto& m : members) {
        std::vector<int> s(m);
        std::sort(s.begin(), s.end());
        if (seen.insert(s).second) out.push_back(std::move(s));
    }
    return out;
}

} // namespace

TrimContext make_trim_context(int universe_size, int rank) {
    TrimContext ctx;
    ctx.rank = rank;
    std::int64_t p = std::max(universe_size, 100) + 1;
    while (!is_prime(p)) ++p;
    ctx.field_prime = p;
    ctx.generator_points.resize(static_cast<size_t>(universe_size));
    for (int i = 0; i < universe_size; ++i) ctx.generator_points[static_cast<size_t>(i)] = i + 1;
    return ctx;
}

SetFamily trim(const SetFamily& f, int q, const TrimContext& ctx) {
    if (q < 0) throw std::invalid_argument("q must be non-negative");
    if (ctx.rank != f.p + q) throw std::invalid_argument("context rank must equal p + q");
    if (!is_prime(ctx.field_prime) || ctx.field_prime <= f.universe_size)
        throw std::invalid_argument("field prime must be a prime larger than the universe");
    if (static_cast<int>(ctx.generator_points.size()) < f.universe_size)
        throw std::invalid_argument("context has too few generator points");

    SetFamily out;
    out.universe_size = f.universe_size;
    out.p = f.p;
    std::vector<std::vector<int>> members = dedup_members(f.members);
    for (const auto& s : members) {
        if (static_cast<int>(s.size()) != f.p) throw std::invalid_argument("member size differs from p");
        for (int v : s)
            if (v < 0 || v >= f.universe_size) throw std::invalid_argument("member element out of range");
    }
    // Loss-free representation needs n >= rank; below that the family stands
    // for itself and callers are within oracle range anyway.
    if (f.universe_size < ctx.rank || f.p == 0) {
        out.members = std::move(members);
        return out;
    }

    const std::int64_t prime = ctx.field_prime;
    const int p = f.p, rank = ctx.rank;
    // Vandermonde rows: row i is x^i over the generator points.
    std::vector<std::vector<std::int64_t>> vm(static_cast<size_t>(rank),
                                              std::vector<std::int64_t>(static_cast<size_t>(f.universe_size)));
    for (int j = 0; j < f.universe_size; ++j) {
        std::int64_t x = ctx.generator_points[static_cast<size_t>(j)] % prime;
        std::int64_t acc = 1;
        for (int i = 0; i < rank; ++i) {
            vm[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
            acc = mulmod(acc, x, prime);
        }
    }
    const std::vector<std::vector<int>> row_subsets = subsets_of(rank, p);
    const size_t dim = row_subsets.size();

    // Row-echelon basis of kept exterior vectors; pivot_col[i] marks the
    // leading coordinate of basis vector i.
    std::vector<std::vector<std::int64_t>> basis;
    std::vector<size_t> pivot_col;
    std::vector<std::vector<std::int64_t>> minor(static_cast<size_t>(p),
                                                 std::vector<std::int64_t>(static_cast<size_t>(p)));
    for (const auto& member : members) {
        effort::bump();
        std::vector<std::int64_t> vec(dim);
        for (size_t r = 0; r < dim; ++r) {
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < p; ++j)
                    minor[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        vm[static_cast<size_t>(row_subsets[r][static_cast<size_t>(i)])]
                          [static_cast<size_t>(member[static_cast<size_t>(j)])];
            vec[r] = det_mod(minor, prime);
        }
        // Reduce against the basis.
        for (size_t b = 0; b < basis.size(); ++b) {
            std::int64_t coef = vec[pivot_col[b]];
            if (coef == 0) continue;
            std::int64_t scale = mulmod(coef, inverse(basis[b][pivot_col[b]], prime), prime);
            for (size_t i = 0; i < dim; ++i) {
                std::int64_t v = vec[i] - mulmod(scale, basis[b][i], prime);
                if (v < 0) v += prime;
                vec[i] = v;
            }
        }
        size_t lead = dim;
        for (size_t i = 0; i < dim; ++i)
            if (vec[i] != 0) {
                lead = i;
                break;
            }
        if (lead == dim) continue; // dependent on kept members
        basis.push_back(std::move(vec));
        pivot_col.push_back(lead);
        out.members.push_back(member);
    }
    return out;
}

bool check_representative(const SetFamily& f, const SetFamily& sub, int q) {
    const int n = f.universe_size;
    if (n > 16) throw std::invalid_argument("check_representative is exhaustive; universe capped at 16");
    if (q < 0 || q > n) throw std::invalid_argument("bad q");
    auto disjoint = [](const std::vector<int>& a, const std::vector<int>& b) {
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return false;
            (a[i] < b[j]) ? ++i : ++j;
        }
        return true;
    };
    std::vector<std::vector<int>> fm = f.members, sm = sub.members;
    for (auto& s : fm) std::sort(s.begin(), s.end());
    for (auto& s : sm) std::sort(s.begin(), s.end());
    // Enumerate all q-subsets B of the universe via bitmask combinations.
    std::vector<int> b(static_cast<size_t>(q));
    for (int i = 0; i < q; ++i) b[static_cast<size_t>(i)] = i;
    for (;;) {
        bool any_f = false;
        for (const auto& a : fm)
            if (disjoint(a, b)) {
                any_f = true;
                break;
            }
        if (any_f) {
            bool any_sub = false;
            for (const auto& a : sm)
                if (disjoint(a, b)) {
                    any_sub = true;
                    break;
                }
            if (!any_sub) return false;
        }
        int i = q - 1;
        while (i >= 0 && b[static_cast<size_t>(i)] == n - q + i) --i;
        if (i < 0) break;
        ++b[static_cast<size_t>(i)];
        for (int j = i + 1; j < q; ++j) b[static_cast<size_t>(j)] = b[static_cast<size_t>(j - 1)] + 1;
    }
    return true;
}

SetFamily union_families(const std::vector<SetFamily>& fs, int q, const TrimContext& ctx) {
    if (fs.empty()) throw std::invalid_argument("no families to unite");
    SetFamily all;
    all.universe_size = fs.front().universe_size;
    all.p = fs.front().p;
    for (const SetFamily& f : fs) {
        if (f.p != all.p) throw std::invalid_argument("families disagree on p");
        if (f.universe_size != all.universe_size)
            throw std::invalid_argument("families disagree on universe size");
        all.members.insert(all.members.end(), f.members.begin(), f.members.end());
    }
    return trim(all, q, ctx);
}

} // namespace spindle
