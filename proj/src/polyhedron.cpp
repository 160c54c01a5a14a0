#include "treemod/polyhedron.hpp"

#include <algorithm>
#include <cstdint>

#include "treemod/error.hpp"

namespace treemod {

namespace {

using Bits = std::vector<std::uint64_t>;

struct Ray {
    std::vector<Rational> coords;  // (x_1..x_d, t)
    Bits tight;
};

bool test(const Bits& b, int i) { return b[i / 64] >> (i % 64) & 1; }
void set(Bits& b, int i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

int popcount(const Bits& b) {
    int c = 0;
    for (auto w : b) c += __builtin_popcountll(w);
    return c;
}

Bits meet(const Bits& a, const Bits& b) {
    Bits out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
    return out;
}

bool contains(const Bits& big, const Bits& small) {
    for (std::size_t i = 0; i < big.size(); ++i) {
        if ((small[i] & ~big[i]) != 0) return false;
    }
    return true;
}

void normalize(std::vector<Rational>& v) {
    for (const auto& x : v) {
        if (x != 0) {
            const Rational scale = abs(x);
            for (auto& y : v) y /= scale;
            return;
        }
    }
}

}  // namespace

std::vector<std::vector<Rational>> blocking_polyhedron_vertices(const std::vector<std::vector<Rational>>& rows,
                                                                int dim) {
    const int num_constraints = dim + 1 + static_cast<int>(rows.size());
    const std::size_t words = (num_constraints + 63) / 64;
    const int cone_dim = dim + 1;

    // Constraint j < dim: x_j >= 0; j == dim: t >= 0; then a_i . x - t >= 0.
    auto evaluate = [&](int constraint, const std::vector<Rational>& r) -> Rational {
        if (constraint <= dim) return r[constraint];
        const auto& a = rows[constraint - dim - 1];
        Rational s = -r[dim];
        for (int j = 0; j < dim; ++j) {
            if (a[j] != 0) s += a[j] * r[j];
        }
        return s;
    };

    std::vector<Ray> rays;
    for (int i = 0; i <= dim; ++i) {
        Ray r{std::vector<Rational>(dim + 1, 0), Bits(words, 0)};
        r.coords[i] = 1;
        for (int j = 0; j <= dim; ++j) {
            if (j != i) set(r.tight, j);
        }
        rays.push_back(std::move(r));
    }

    for (int c = dim + 1; c < num_constraints; ++c) {
        std::vector<Rational> value(rays.size());
        std::vector<int> plus, minus;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            value[k] = evaluate(c, rays[k].coords);
            if (value[k] > 0) plus.push_back(static_cast<int>(k));
            if (value[k] < 0) minus.push_back(static_cast<int>(k));
        }
        if (minus.empty()) {
            for (std::size_t k = 0; k < rays.size(); ++k) {
                if (value[k] == 0) set(rays[k].tight, c);
            }
            continue;
        }
        std::vector<Ray> next;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            if (value[k] >= 0) {
                Ray r = rays[k];
                if (value[k] == 0) set(r.tight, c);
                next.push_back(std::move(r));
            }
        }
        for (int p : plus) {
            for (int q : minus) {
                Bits common = meet(rays[p].tight, rays[q].tight);
                if (popcount(common) < cone_dim - 2) continue;
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (static_cast<int>(k) == p || static_cast<int>(k) == q) continue;
                    if (contains(rays[k].tight, common)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray r{std::vector<Rational>(dim + 1), common};
                const Rational wp = -value[q];
                const Rational wq = value[p];
                for (int j = 0; j <= dim; ++j) r.coords[j] = wp * rays[p].coords[j] + wq * rays[q].coords[j];
                normalize(r.coords);
                set(r.tight, c);
                next.push_back(std::move(r));
            }
        }
        rays = std::move(next);
    }

    std::vector<std::vector<Rational>> vertices;
    for (const auto& r : rays) {
        if (r.coords[dim] <= 0) continue;
        std::vector<Rational> v(dim);
        for (int j = 0; j < dim; ++j) v[j] = r.coords[j] / r.coords[dim];
        vertices.push_back(std::move(v));
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

}  // namespace treemod
