#include "polyclus/mesh.hpp"

#include <functional>
#include <stdexcept>
#include <thread>

namespace polyclus {

void parallel_for(int n, int threads, const std::function<void(int)>& body) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    int workers = std::min(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) body(i);
        });
    for (auto& th : pool) th.join();
}

int CoverContext::lift_slice(int quiver_vertex) const {
    return to_standard[static_cast<size_t>(quiver_vertex)] / cover.tree_n;
}

int CoverContext::lift_tree_vertex(int quiver_vertex) const {
    return to_standard[static_cast<size_t>(quiver_vertex)] % cover.tree_n;
}

int CoverContext::lift_id(int quiver_vertex) const {
    return cover.id(lift_slice(quiver_vertex), lift_tree_vertex(quiver_vertex));
}

int default_window(const TreeShape& shape, int deck_exponent) {
    return 4 * shape.vertex_count() + 2 * deck_exponent;
}

CoverContext make_cover_context(const TranslationQuiver& q, int window_override) {
    if (!q.has_cover)
        throw std::invalid_argument("quiver carries no covering data");
    CoverContext ctx;
    ctx.deck_exponent = q.deck_exponent;
    ctx.deck_twist = q.deck_twist;
    int window = window_override > 0 ? window_override : default_window(q.cover_shape, q.deck_exponent);
    ctx.cover = build_covering(q.cover_shape, window);
    ctx.standard = build_deck_quotient(q.cover_shape, q.deck_exponent, q.deck_twist);
    auto iso = isomorphic_translation_quivers(q, ctx.standard);
    if (!iso)
        throw std::runtime_error("quiver is not isomorphic to its standard deck quotient");
    ctx.to_standard = *iso;
    return ctx;
}

int hom_dim_quotient(const CoverContext& ctx, const std::vector<int>& cover_dims_from_x, int y) {
    const int m = ctx.deck_exponent;
    int base = ctx.cover.id(ctx.lift_slice(y), ctx.lift_tree_vertex(y));
    int total = 0;
    int k_lo = 0, k_hi = 0;
    while (deck_power(ctx.cover, base, k_lo - 1, m, ctx.deck_twist) >= 0) --k_lo;
    while (deck_power(ctx.cover, base, k_hi + 1, m, ctx.deck_twist) >= 0) ++k_hi;
    for (int k = k_lo; k <= k_hi; ++k) {
        int vid = deck_power(ctx.cover, base, k, m, ctx.deck_twist);
        int contribution = cover_dims_from_x[static_cast<size_t>(vid)];
        if ((k == k_lo || k == k_hi) && contribution != 0)
            throw std::runtime_error("covering window too small: extreme deck translate contributes");
        total += contribution;
    }
    return total;
}

HomTable hom_table(const TranslationQuiver& q, int threads, int window_override) {
    CoverContext ctx = make_cover_context(q, window_override);
    const int n = q.size();
    HomTable table;
    table.spec = q.spec;
    table.dims.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    parallel_for(n, threads, [&](int x) {
        std::vector<int> h = hom_dims_from(ctx.cover, ctx.lift_id(x));
        for (int y = 0; y < n; ++y) table.dims[static_cast<size_t>(x)][static_cast<size_t>(y)] = hom_dim_quotient(ctx, h, y);
    });
    return table;
}

ExtTable ext_table(const TranslationQuiver& q, int threads, int window_override) {
    if (q.kind != CategoryKind::cluster)
        throw std::invalid_argument(
            "ext table is only defined on cluster (2-Calabi-Yau) quotients; "
            "this quiver models a repetitive orbit category whose front and back "
            "hammocks differ");
    CoverContext ctx = make_cover_context(q, window_override);
    const int n = q.size();
    ExtTable table;
    table.spec = q.spec;
    table.cy2 = true;
    table.dims.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    parallel_for(n, threads, [&](int x) {
        std::vector<int> h = hom_dims_from(ctx.cover, ctx.lift_id(q.tau_inv[x]));
        for (int y = 0; y < n; ++y) table.dims[static_cast<size_t>(x)][static_cast<size_t>(y)] = hom_dim_quotient(ctx, h, y);
    });
    for (int x = 0; x < n; ++x) {
        if (table(x, x) != 0) throw std::runtime_error("ext table has a nonzero diagonal entry");
        for (int y = 0; y < n; ++y)
            if (table(x, y) != table(y, x)) throw std::runtime_error("ext table is not symmetric");
    }
    return table;
}

}  // namespace polyclus
