#include "mfic/dedup.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>

#include "mfic/errors.hpp"
#include "mfic/hierarchy.hpp"

namespace mfic {

SimilarityMatrix pairwise_jaccard(const CorpusMatrix& matrix, int threads) {
    SimilarityMatrix sim;
    sim.n = matrix.m;
    sim.entries.assign(static_cast<std::size_t>(sim.n),
                       std::vector<double>(static_cast<std::size_t>(sim.n), 0.0));
    auto fill_rows = [&](int first, int step) -> std::int64_t {
        std::int64_t evals = 0;
        for (int i = first; i < sim.n; i += step) {
            sim.entries[i][i] = 1.0;
            for (int j = i + 1; j < sim.n; ++j) {
                double v =
                    weighted_jaccard(matrix.vectors[i], matrix.vectors[j]);
                ++evals;
                sim.entries[i][j] = v;
                sim.entries[j][i] = v;
            }
        }
        return evals;
    };
    if (threads <= 1 || sim.n < 4) {
        sim.evaluations = fill_rows(0, 1);
        return sim;
    }
    std::vector<std::future<std::int64_t>> parts;
    for (int t = 0; t < threads; ++t)
        parts.push_back(
            std::async(std::launch::async, fill_rows, t, threads));
    for (auto& p : parts) sim.evaluations += p.get();
    return sim;
}

SimilarityMatrix maxmin_closure(const SimilarityMatrix& sim) {
    SimilarityMatrix closed = sim;
    const int n = sim.n;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<double>> next = closed.entries;
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                double best = closed.entries[i][k];
                for (int j = 0; j < n; ++j) {
                    double via =
                        std::min(closed.entries[i][j], closed.entries[j][k]);
                    if (via > best) best = via;
                }
                if (best != next[i][k]) {
                    next[i][k] = best;
                    changed = true;
                }
            }
        }
        closed.entries = std::move(next);
    }
    return closed;
}

CutRelation alpha_cut(const SimilarityMatrix& sim, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("alpha must be in (0,1]");
    CutRelation rel;
    rel.n = sim.n;
    rel.adjacency.assign(static_cast<std::size_t>(rel.n),
                         std::vector<bool>(static_cast<std::size_t>(rel.n), false));
    for (int i = 0; i < rel.n; ++i)
        for (int j = 0; j < rel.n; ++j)
            rel.adjacency[i][j] = (i != j) && (sim.at(i, j) >= alpha);
    return rel;
}

Partition partition(const CutRelation& rel) {
    const int n = rel.n;
    std::vector<int> root(static_cast<std::size_t>(n));
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (root[x] != x) {
            root[x] = root[root[x]];
            x = root[x];
        }
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rel.adjacency[i][j]) {
                int a = find(i), b = find(j);
                if (a != b) root[std::max(a, b)] = std::min(a, b);
            }
    std::vector<std::vector<int>> by_root(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) by_root[static_cast<std::size_t>(find(i))].push_back(i);
    Partition part;
    for (auto& cls : by_root)
        if (!cls.empty()) part.classes.push_back(std::move(cls));
    return part;
}

namespace {

DedupReport report_from(const SimilarityMatrix& raw, double alpha,
                        bool use_closure) {
    DedupReport report;
    report.alpha = alpha;
    report.closure = use_closure;
    report.similarity = use_closure ? maxmin_closure(raw) : raw;
    CutRelation rel = alpha_cut(report.similarity, alpha);
    report.part = partition(rel);
    for (const auto& cls : report.part.classes) {
        if (cls.size() == 1) {
            report.singletons.push_back(cls.front());
            continue;
        }
        DuplicateGroup group;
        group.docs = cls;
        for (std::size_t a = 0; a < cls.size(); ++a)
            for (std::size_t b = a + 1; b < cls.size(); ++b)
                group.pairs.push_back(
                    {static_cast<double>(cls[a]), static_cast<double>(cls[b]),
                     report.similarity.at(cls[a], cls[b])});
        report.groups.push_back(std::move(group));
    }
    return report;
}

}  // namespace

DedupReport dedup_report(const CorpusMatrix& matrix, double alpha,
                         bool use_closure, int threads) {
    return report_from(pairwise_jaccard(matrix, threads), alpha, use_closure);
}

DedupReport dedup_report(const SimilarityMatrix& sim, double alpha,
                         bool use_closure) {
    return report_from(sim, alpha, use_closure);
}

}  // namespace mfic
