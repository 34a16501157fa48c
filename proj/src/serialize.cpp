#include "mfic/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "mfic/errors.hpp"

namespace mfic {
namespace {

// Pin the serialized weight to 17 significant digits (round-trip exact).
double sig17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::strtod(buf, nullptr);
}

}  // namespace

Json matrix_to_json(const CorpusMatrix& matrix) {
    Json j;
    j["m"] = matrix.m;
    j["terms"] = matrix.vocabulary.terms;
    j["df"] = matrix.vocabulary.df;
    Json vectors = Json::array();
    for (const auto& vec : matrix.vectors) {
        Json entries = Json::array();
        for (const auto& [tid, count] : vec.tf)
            entries.push_back({tid, count, sig17(vec.weights.at(tid))});
        vectors.push_back({{"doc_id", vec.doc_id}, {"entries", entries}});
    }
    j["vectors"] = vectors;
    return j;
}

Json itemsets_to_json(const MiningResult& result) {
    Json j;
    j["minsup"] = result.minsup;
    Json maximal = Json::array();
    for (const auto& s : result.maximal)
        maximal.push_back({{"docs", s.items}, {"support", s.support}});
    j["maximal"] = maximal;
    return j;
}

Json tree_to_json(const HierarchyTree& tree) {
    Json j;
    j["levels"] = static_cast<int>(tree.levels.size());
    Json nodes = Json::array();
    for (const auto& level : tree.levels) {
        for (const auto& node : level) {
            nodes.push_back({{"id", node.id},
                             {"level", node.level},
                             {"members", node.members},
                             {"label_terms", node.label_terms},
                             {"children", node.children},
                             {"synthetic", node.synthetic}});
        }
    }
    j["nodes"] = nodes;
    j["root"] = tree.root;
    return j;
}

Json report_to_json(const DedupReport& report,
                    const std::vector<std::string>& sources) {
    Json j;
    j["alpha"] = report.alpha;
    j["closure"] = report.closure;
    Json groups = Json::array();
    for (const auto& g : report.groups) {
        Json group;
        group["docs"] = g.docs;
        Json src = Json::array();
        for (int d : g.docs)
            if (static_cast<std::size_t>(d) < sources.size())
                src.push_back(sources[static_cast<std::size_t>(d)]);
        group["sources"] = src;
        Json pairs = Json::array();
        for (const auto& p : g.pairs)
            pairs.push_back({static_cast<int>(p[0]), static_cast<int>(p[1]),
                             sig17(p[2])});
        group["pairs"] = pairs;
        groups.push_back(std::move(group));
    }
    j["groups"] = groups;
    j["singletons"] = report.singletons;
    return j;
}

SimilarityMatrix similarity_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("rows"))
        throw DomainError("matrix file must have fields n and rows");
    SimilarityMatrix sim;
    sim.n = j.at("n").get<int>();
    const auto& rows = j.at("rows");
    if (sim.n < 1 || !rows.is_array() ||
        static_cast<int>(rows.size()) != sim.n)
        throw DomainError("matrix is not n x n");
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != sim.n)
            throw DomainError("matrix is not n x n");
        sim.entries.push_back(row.get<std::vector<double>>());
    }
    for (int i = 0; i < sim.n; ++i) {
        for (int k = 0; k < sim.n; ++k) {
            double v = sim.entries[i][k];
            if (!(v >= 0.0 && v <= 1.0))
                throw DomainError("matrix entry outside [0,1]");
            if (std::fabs(v - sim.entries[k][i]) > 1e-9)
                throw DomainError("matrix is not symmetric");
        }
        sim.entries[i][i] = 1.0;
    }
    return sim;
}

}  // namespace mfic
