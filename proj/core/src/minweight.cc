// Copyright 2026 The agqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "agqc/minweight.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

namespace agqc {

namespace {

using Raw = Field::Raw;
using Vec = std::vector<Raw>;

unsigned resolve_workers(const SearchOptions &opts) {
    if (opts.workers) return opts.workers;
    return std::max(1u, std::thread::hardware_concurrency());
}

void run_tasks(std::size_t tasks, unsigned workers, const std::function<void(std::size_t)> &body) {
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, tasks));
    if (workers <= 1) {
        for (std::size_t t = 0; t < tasks; ++t) body(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t t = next++; t < tasks; t = next++) body(t);
        });
    }
    for (auto &th : pool) th.join();
}

void atomic_min(std::atomic<std::int64_t> &a, std::int64_t v) {
    std::int64_t cur = a.load();
    while (v < cur && !a.compare_exchange_weak(cur, v)) {
    }
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = saturating_mul(r, base);
    return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    __extension__ unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

std::int64_t weight(std::span<const Raw> v) {
    return std::count_if(v.begin(), v.end(), [](Raw x) { return x != 0; });
}

// u^l * row for every row and every l < [F : F_p]; these span the code over F_p.
std::vector<Vec> fp_spanning_set(const Matrix &g) {
    const Field &f = g.field();
    std::vector<Vec> out;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        Raw scale = 1;
        for (std::uint32_t l = 0; l < f.degree(); ++l) {
            Vec v(g.row(i).begin(), g.row(i).end());
            for (auto &x : v) x = f.mul(x, scale);
            out.push_back(std::move(v));
            scale = f.mul(scale, f.generator() ? f.generator() : 1);
        }
    }
    return out;
}

// Minimum weight over all F_p-combinations of vecs whose digits at indices
// >= relevant_from are not all zero. Each step of the p-ary odometer adds one
// spanning vector, since p additions of a vector cancel.
std::int64_t span_min_weight(const Field &f, const std::vector<Vec> &vecs, std::size_t relevant_from,
                             std::size_t n, unsigned workers) {
    const std::uint32_t p = f.characteristic();
    const std::size_t total = vecs.size();
    std::size_t high = 0;
    std::uint64_t tasks = 1;
    while (workers > 1 && high < total && tasks < 8ull * workers) {
        ++high;
        tasks *= p;
    }
    const std::size_t low = total - high;
    std::atomic<std::int64_t> best{kInfiniteWeight};

    run_tasks(tasks, workers, [&](std::size_t task) {
        Vec cur(n, 0);
        std::int64_t relevant_nonzero = 0;
        std::size_t t = task;
        for (std::size_t i = low; i < total; ++i) {
            const Raw digit = static_cast<Raw>(t % p);
            t /= p;
            if (!digit) continue;
            if (i >= relevant_from) ++relevant_nonzero;
            add_scaled(f, cur, vecs[i], f.from_int(digit));
        }
        std::int64_t wt = weight(cur);
        std::int64_t local = kInfiniteWeight;
        std::vector<std::uint32_t> digits(low, 0);
        while (true) {
            if (relevant_nonzero > 0) local = std::min(local, wt);
            std::size_t i = 0;
            for (; i < low; ++i) {
                const Vec &v = vecs[i];
                for (std::size_t j = 0; j < n; ++j) {
                    if (!v[j]) continue;
                    const Raw old = cur[j];
                    const Raw nw = f.add(old, v[j]);
                    wt += (nw != 0) - (old != 0);
                    cur[j] = nw;
                }
                if (++digits[i] < p) {
                    if (digits[i] == 1 && i >= relevant_from) ++relevant_nonzero;
                    break;
                }
                digits[i] = 0;
                if (i >= relevant_from) --relevant_nonzero;
            }
            if (i == low) break;
        }
        atomic_min(best, local);
    });
    return best.load();
}

std::uint64_t codeword_count(const Field &f, std::size_t k) { return saturating_pow(f.order(), k); }

// Systematic generator matrices on successive, as-disjoint-as-possible information sets.
struct InformationSet {
    Matrix generator;     // k x n, identity on the pivot columns
    std::size_t fresh;    // pivots on columns not used by earlier sets
};

std::vector<InformationSet> information_sets(const Matrix &g) {
    const std::size_t n = g.cols();
    const std::size_t k = g.rows();
    std::vector<bool> used(n, false);
    std::vector<InformationSet> out;
    while (true) {
        std::vector<std::size_t> order;
        for (std::size_t j = 0; j < n; ++j)
            if (!used[j]) order.push_back(j);
        const std::size_t avail = order.size();
        if (avail == 0) break;
        for (std::size_t j = 0; j < n; ++j)
            if (used[j]) order.push_back(j);
        Matrix permuted(g.field(), k, n);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t j = 0; j < n; ++j) permuted.set_raw(r, j, g.raw(r, order[j]));
        const auto red = rref(permuted);
        ensure(red.rank == k, "generator matrix is not of full rank");
        std::size_t fresh = 0;
        for (std::size_t piv : red.pivots)
            if (piv < avail) ++fresh;
        if (fresh == 0) break;
        Matrix sys(g.field(), k, n);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t j = 0; j < n; ++j) sys.set_raw(r, order[j], red.reduced.raw(r, j));
        for (std::size_t piv : red.pivots)
            if (piv < avail) used[order[piv]] = true;
        out.push_back(InformationSet{std::move(sys), fresh});
    }
    return out;
}

std::int64_t contribution(std::int64_t w, std::size_t k, std::size_t fresh) {
    return std::max<std::int64_t>(0, w + 1 - static_cast<std::int64_t>(k - fresh));
}

WeightBracket bz_search(const Matrix &gen, const Matrix *parity, const SearchOptions &opts) {
    const Field &f = gen.field();
    const std::size_t k = gen.rows();
    const std::size_t n = gen.cols();
    WeightBracket out;
    if (k == 0) {
        out.lower = out.upper = kInfiniteWeight;
        return out;
    }
    const auto sets = information_sets(gen);
    const unsigned workers = resolve_workers(opts);
    const std::uint32_t q = f.order();
    std::vector<Raw> nonzero;
    for (Raw a = 1; a < q; ++a) nonzero.push_back(a);

    auto outside = [&](const Vec &c) {
        if (!parity) return true;
        for (std::size_t r = 0; r < parity->rows(); ++r) {
            Raw acc = 0;
            auto h = parity->row(r);
            for (std::size_t j = 0; j < n; ++j)
                if (h[j] && c[j]) acc = f.add(acc, f.mul(h[j], c[j]));
            if (acc) return true;
        }
        return false;
    };

    std::atomic<std::int64_t> best{kInfiniteWeight};
    out.lower = 1;
    for (std::size_t w = 1; w <= k; ++w) {
        for (std::size_t s = 0; s < sets.size(); ++s) {
            const std::uint64_t cost = saturating_mul(binomial(k, w), saturating_pow(q - 1, w - 1));
            if (out.candidates + cost > opts.budget || out.candidates + cost < out.candidates) {
                out.upper = best.load();
                return out;
            }
            const Matrix &m = sets[s].generator;
            // Task = index of the first row, whose coefficient is fixed to 1.
            run_tasks(k - w + 1, workers, [&](std::size_t first) {
                std::vector<Vec> partial(w, Vec(n, 0));
                partial[0].assign(m.row(first).begin(), m.row(first).end());
                std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t depth, std::size_t start) {
                    if (depth == w) {
                        const Vec &c = partial[w - 1];
                        const std::int64_t wt = weight(c);
                        if (wt < best.load() && outside(c)) atomic_min(best, wt);
                        return;
                    }
                    for (std::size_t row = start; row + (w - depth) <= k; ++row) {
                        auto src = m.row(row);
                        for (Raw a : nonzero) {
                            partial[depth] = partial[depth - 1];
                            add_scaled(f, partial[depth], src, a);
                            dfs(depth + 1, row + 1);
                        }
                    }
                };
                dfs(1, first + 1);
            });
            out.candidates += cost;
            if (w == k) {
                // Every codeword has been listed.
                out.lower = out.upper = best.load();
                return out;
            }
            std::int64_t lower = 0;
            for (std::size_t t = 0; t < sets.size(); ++t)
                lower += contribution(t <= s ? w : w - 1, k, sets[t].fresh);
            out.lower = std::max(out.lower, lower);
            if (out.lower >= best.load()) {
                out.lower = out.upper = best.load();
                return out;
            }
        }
    }
    out.upper = best.load();
    return out;
}

}  // namespace

std::string WeightBracket::to_string() const {
    auto fmt = [](std::int64_t v) { return v == kInfiniteWeight ? std::string("inf") : std::to_string(v); };
    if (exact()) return fmt(upper);
    return "[" + fmt(lower) + ", " + fmt(upper) + "]";
}

std::int64_t exhaustive_min_weight(const LinearCode &c, const SearchOptions &opts) {
    if (c.dimension() == 0) return kInfiniteWeight;
    if (codeword_count(c.field(), c.dimension()) > opts.budget)
        throw Error("code has too many codewords for enumeration; use search");
    return span_min_weight(c.field(), fp_spanning_set(c.generator()), 0, c.length(), resolve_workers(opts));
}

WeightBracket bz_min_weight(const LinearCode &c, const SearchOptions &opts) {
    return bz_search(c.generator(), nullptr, opts);
}

WeightBracket bz_min_weight_outside(const LinearCode &c, const LinearCode &excluded, const SearchOptions &opts) {
    require(c.field() == excluded.field() && c.length() == excluded.length(), "codes of different shape");
    require(rowspace_contains(excluded.generator(), c.generator()), "excluded code is not a subcode");
    if (excluded.dimension() == 0) return bz_search(c.generator(), nullptr, opts);
    const Matrix parity = kernel(excluded.generator());
    return bz_search(c.generator(), &parity, opts);
}

std::int64_t coset_min_weight(const LinearCode &c2, const LinearCode &c1, const SearchOptions &opts) {
    require(c1.field() == c2.field() && c1.length() == c2.length(), "codes of different shape");
    require(rowspace_contains(c1.generator(), c2.generator()), "C1 is not contained in C2");
    if (codeword_count(c2.field(), c2.dimension()) > opts.budget)
        throw Error("coset is too large for enumeration; use search");
    Matrix basis = c1.generator();
    RowSpace span(basis);
    for (std::size_t r = 0; r < c2.dimension(); ++r) {
        if (span.contains(c2.generator().row(r))) continue;
        basis.append_row(c2.generator().row(r));
        span = RowSpace(basis);
    }
    if (basis.rows() == c1.dimension()) return kInfiniteWeight;
    const std::size_t relevant = c1.dimension() * c2.field().degree();
    return span_min_weight(c2.field(), fp_spanning_set(basis), relevant, c2.length(), resolve_workers(opts));
}

std::int64_t CssDistance::lower() const { return std::min(x_side.lower, z_side.lower); }
std::int64_t CssDistance::upper() const { return std::min(x_side.upper, z_side.upper); }
bool CssDistance::exact() const {
    // The minimum is pinned once the smaller side is exact and the other side cannot go below it.
    const std::int64_t u = upper();
    return (x_side.exact() && x_side.upper == u && z_side.lower >= u) ||
           (z_side.exact() && z_side.upper == u && x_side.lower >= u);
}

CssDistance css_distance(const LinearCode &c1, const LinearCode &c2, const SearchOptions &opts) {
    CssDistance out;
    if (codeword_count(c2.field(), c2.dimension()) <= opts.budget) {
        const std::int64_t d = coset_min_weight(c2, c1, opts);
        out.x_side.lower = out.x_side.upper = d;
        out.x_side.candidates = codeword_count(c2.field(), c2.dimension());
    } else {
        out.x_side = bz_min_weight_outside(c2, c1, opts);
    }
    out.z_side = bz_min_weight_outside(dual_code(c1), dual_code(c2), opts);
    return out;
}

}  // namespace agqc
