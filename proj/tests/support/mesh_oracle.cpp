#include "mesh_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "polyclus/mesh.hpp"

namespace polyclus::testing {

namespace {

struct Rat {
    long long n = 0;
    long long d = 1;

    void reduce() {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (d == 0) throw std::overflow_error("rational with zero denominator");
    }
    bool zero() const { return n == 0; }
};

Rat make(long long n, long long d = 1) {
    Rat r{n, d};
    r.reduce();
    return r;
}

Rat add(Rat a, Rat b) { return make(a.n * b.d + b.n * a.d, a.d * b.d); }
Rat sub(Rat a, Rat b) { return make(a.n * b.d - b.n * a.d, a.d * b.d); }
Rat mul(Rat a, Rat b) { return make(a.n * b.n, a.d * b.d); }
Rat div(Rat a, Rat b) {
    if (b.zero()) throw std::overflow_error("division by zero");
    return make(a.n * b.d, a.d * b.n);
}

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // rows

// Reduced row echelon form in place; returns pivot column per row.
std::vector<int> rref(Mat& rows) {
    std::vector<int> pivots;
    size_t lead = 0;
    const size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t r = 0; r < rows.size() && lead < cols; ++r) {
        size_t i = r;
        while (i < rows.size() && rows[i][lead].zero()) {
            ++i;
            if (i == rows.size()) {
                i = r;
                ++lead;
                if (lead == cols) break;
            }
        }
        if (lead == cols) break;
        std::swap(rows[i], rows[r]);
        Rat pivot = rows[r][lead];
        for (auto& e : rows[r]) e = div(e, pivot);
        for (size_t j = 0; j < rows.size(); ++j) {
            if (j == r || rows[j][lead].zero()) continue;
            Rat f = rows[j][lead];
            for (size_t cidx = 0; cidx < cols; ++cidx)
                rows[j][cidx] = sub(rows[j][cidx], mul(f, rows[r][cidx]));
        }
        pivots.push_back(static_cast<int>(lead));
        ++lead;
    }
    rows.resize(pivots.size());
    return pivots;
}

// Quotient space V = Q^cols / rowspace, with projection to coordinates on
// the free columns.
struct Quotient {
    int cols = 0;
    Mat rows;                 // RREF basis of the subspace to kill
    std::vector<int> pivots;  // pivot column of each row
    std::vector<int> free;    // free columns = quotient basis

    int dim() const { return static_cast<int>(free.size()); }

    Vec project(Vec v) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            Rat f = v[static_cast<size_t>(pivots[r])];
            if (f.zero()) continue;
            for (int c = 0; c < cols; ++c) v[static_cast<size_t>(c)] = sub(v[static_cast<size_t>(c)], mul(f, rows[r][static_cast<size_t>(c)]));
        }
        Vec out(free.size());
        for (size_t i = 0; i < free.size(); ++i) out[i] = v[static_cast<size_t>(free[i])];
        return out;
    }
};

Quotient make_quotient(int cols, Mat relations) {
    Quotient qt;
    qt.cols = cols;
    qt.rows = std::move(relations);
    qt.pivots = rref(qt.rows);
    std::vector<char> is_pivot(static_cast<size_t>(cols), 0);
    for (int p : qt.pivots) is_pivot[static_cast<size_t>(p)] = 1;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) qt.free.push_back(c);
    return qt;
}

}  // namespace

std::vector<int> mesh_hom_oracle_row(const TranslationQuiver& q, int x) {
    const int n = q.size();
    // arrows indexed as in q.arrows; per-vertex in-arrow lists with offsets
    std::vector<std::vector<int>> in_arrows(static_cast<size_t>(n));
    for (size_t a = 0; a < q.arrows.size(); ++a) in_arrows[static_cast<size_t>(q.arrows[a].second)].push_back(static_cast<int>(a));

    auto arrow_index = [&](int u, int v) -> int {
        auto it = std::lower_bound(q.arrows.begin(), q.arrows.end(), std::make_pair(u, v));
        if (it != q.arrows.end() && *it == std::make_pair(u, v))
            return static_cast<int>(it - q.arrows.begin());
        return -1;
    };

    std::vector<int> dim_prev2, dim_prev(static_cast<size_t>(n), 0), dim_cur(static_cast<size_t>(n), 0);
    dim_prev[static_cast<size_t>(x)] = 1;  // degree 0: the identity
    std::vector<int> total(static_cast<size_t>(n), 0);
    total[static_cast<size_t>(x)] = 1;

    // maps_prev[a]: Hom_{l-2}(src a) -> Hom_{l-1}(dst a) at iteration l
    std::vector<Mat> maps_prev(q.arrows.size()), maps_cur(q.arrows.size());

    const int cap = 8 * n + 64;
    for (int degree = 1; degree <= cap; ++degree) {
        dim_cur.assign(static_cast<size_t>(n), 0);
        for (auto& mat : maps_cur) mat.clear();
        std::vector<Quotient> quo(static_cast<size_t>(n));

        for (int y = 0; y < n; ++y) {
            const auto& ins = in_arrows[static_cast<size_t>(y)];
            int cols = 0;
            std::vector<int> offset(ins.size(), 0);
            for (size_t i = 0; i < ins.size(); ++i) {
                offset[i] = cols;
                cols += dim_prev[static_cast<size_t>(q.arrows[static_cast<size_t>(ins[i])].first)];
            }
            if (cols == 0) continue;
            Mat relations;
            int ty = q.tau[y];
            if (degree >= 2 && dim_prev2[static_cast<size_t>(ty)] > 0) {
                // mesh at y: the composite tau(y) -> w -> y summed over all
                // middle vertices w, applied to every morphism x -> tau(y)
                for (int e = 0; e < dim_prev2[static_cast<size_t>(ty)]; ++e) {
                    Vec row(static_cast<size_t>(cols), Rat{});
                    for (size_t i = 0; i < ins.size(); ++i) {
                        int w = q.arrows[static_cast<size_t>(ins[i])].first;
                        int a1 = arrow_index(ty, w);
                        if (a1 < 0) continue;
                        const Mat& m1 = maps_prev[static_cast<size_t>(a1)];
                        if (m1.empty()) continue;
                        const Vec& img = m1[static_cast<size_t>(e)];
                        for (size_t c = 0; c < img.size(); ++c)
                            row[static_cast<size_t>(offset[i]) + c] = add(row[static_cast<size_t>(offset[i]) + c], img[c]);
                    }
                    relations.push_back(std::move(row));
                }
            }
            quo[static_cast<size_t>(y)] = make_quotient(cols, std::move(relations));
            dim_cur[static_cast<size_t>(y)] = quo[static_cast<size_t>(y)].dim();
            total[static_cast<size_t>(y)] += dim_cur[static_cast<size_t>(y)];
        }

        // arrow maps from degree-(l-1) spaces into the new degree-l spaces
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            auto [src, dst] = q.arrows[a];
            int dsrc = dim_prev[static_cast<size_t>(src)];
            if (dsrc == 0 || dim_cur[static_cast<size_t>(dst)] == 0) continue;
            const auto& ins = in_arrows[static_cast<size_t>(dst)];
            int cols = quo[static_cast<size_t>(dst)].cols;
            int my_offset = 0;
            for (int ia : ins) {
                if (ia == static_cast<int>(a)) break;
                my_offset += dim_prev[static_cast<size_t>(q.arrows[static_cast<size_t>(ia)].first)];
            }
            Mat m(static_cast<size_t>(dsrc));
            for (int e = 0; e < dsrc; ++e) {
                Vec v(static_cast<size_t>(cols), Rat{});
                v[static_cast<size_t>(my_offset + e)] = make(1);
                m[static_cast<size_t>(e)] = quo[static_cast<size_t>(dst)].project(std::move(v));
            }
            maps_cur[a] = std::move(m);
        }

        bool all_zero = true;
        for (int d : dim_cur)
            if (d != 0) all_zero = false;
        if (all_zero) return total;

        dim_prev2 = dim_prev;
        dim_prev = dim_cur;
        maps_prev = maps_cur;
    }
    throw std::runtime_error("mesh oracle did not terminate within the degree cap");
}

std::vector<std::vector<int>> mesh_hom_oracle(const TranslationQuiver& q, int threads) {
    std::vector<std::vector<int>> dims(static_cast<size_t>(q.size()));
    parallel_for(q.size(), threads, [&](int x) { dims[static_cast<size_t>(x)] = mesh_hom_oracle_row(q, x); });
    return dims;
}

}  // namespace polyclus::testing
