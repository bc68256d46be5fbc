#include "polyclus/covering.hpp"

#include <numeric>
#include <stdexcept>

namespace polyclus {

CoveringQuiver build_covering(const TreeShape& shape, int window) {
    shape.validate();
    if (window < 1) throw std::invalid_argument("covering window must be >= 1 slice");
    CoveringQuiver c;
    c.shape = shape;
    c.window = window;
    c.tree_n = shape.vertex_count();
    auto r_at = [&](int d) { return d; };
    auto s_at = [&](int d) { return shape.r + d; };
    auto t_at = [&](int d) { return shape.r + shape.s + d; };
    for (int d = shape.r; d >= 2; --d) c.tree_arrows.emplace_back(r_at(d), r_at(d - 1));
    if (shape.r >= 1) c.tree_arrows.emplace_back(r_at(1), 0);
    if (shape.s >= 1) c.tree_arrows.emplace_back(0, s_at(1));
    for (int d = 1; d < shape.s; ++d) c.tree_arrows.emplace_back(s_at(d), s_at(d + 1));
    if (shape.t >= 1) c.tree_arrows.emplace_back(0, t_at(1));
    for (int d = 1; d < shape.t; ++d) c.tree_arrows.emplace_back(t_at(d), t_at(d + 1));

    c.swap_legs.resize(c.tree_n);
    std::iota(c.swap_legs.begin(), c.swap_legs.end(), 0);
    if (shape.symmetric())
        for (int d = 1; d <= shape.s; ++d) {
            c.swap_legs[s_at(d)] = t_at(d);
            c.swap_legs[t_at(d)] = s_at(d);
        }

    c.depth.assign(c.tree_n, 0);
    for (int d = 1; d <= shape.r; ++d) c.depth[r_at(d)] = -d;
    for (int d = 1; d <= shape.s; ++d) c.depth[s_at(d)] = d;
    for (int d = 1; d <= shape.t; ++d) c.depth[t_at(d)] = d;

    c.in_tree.assign(c.tree_n, {});
    c.out_tree.assign(c.tree_n, {});
    for (auto [u, v] : c.tree_arrows) {
        c.out_tree[u].push_back(v);
        c.in_tree[v].push_back(u);
    }
    return c;
}

std::vector<int> hom_dims_from(const CoveringQuiver& cover, int x_id) {
    const int W = cover.window;
    std::vector<int> h(cover.size(), 0);
    const int x_slice = cover.slice_of(x_id);
    const int x_vertex = cover.tree_vertex_of(x_id);
    const int x_grade = 2 * x_slice + cover.depth[x_vertex];
    h[x_id] = 1;

    // process in grade order: arrows raise 2*slice + depth by exactly one
    std::vector<int> order(cover.tree_n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return cover.depth[a] < cover.depth[b]; });

    for (int slice = x_slice; slice <= W; ++slice) {
        for (int v : order) {
            int yid = cover.id(slice, v);
            if (yid == x_id) continue;
            if (2 * slice + cover.depth[v] <= x_grade) continue;
            long long sum = 0;
            for (int u : cover.in_tree[v]) sum += h[cover.id(slice, u)];
            if (cover.in_window(slice - 1)) {
                // cross-slice arrows (n-1, w) -> (n, v) exist for tree arrows v -> w
                for (int w : cover.out_tree[v]) sum += h[cover.id(slice - 1, w)];
                sum -= h[cover.id(slice - 1, v)];  // minus h(tau y)
            }
            h[yid] = static_cast<int>(std::max(0LL, sum));
        }
    }

    for (int slice = W - 1; slice <= W; ++slice)
        for (int v = 0; v < cover.tree_n; ++v)
            if (h[cover.id(slice, v)] != 0)
                throw std::runtime_error("covering window too small: Hom support reaches the boundary");
    return h;
}

int deck_power(const CoveringQuiver& cover, int vid, int k, int m, bool twist) {
    int slice = cover.slice_of(vid) + k * m;
    if (!cover.in_window(slice)) return -1;
    int v = cover.tree_vertex_of(vid);
    if (twist && (k % 2 != 0)) v = cover.swap_legs[v];
    return cover.id(slice, v);
}

}  // namespace polyclus
