// mfic: batch front end for MFI-seeded hierarchical document clustering
// and equivalence-relation near-duplicate detection.
//
// Exit codes: 0 ok, 2 ingestion failure, 3 vectorization failure,
// 4 bad dedup input, 1 anything else.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mfic/dedup.hpp"
#include "mfic/errors.hpp"
#include "mfic/hierarchy.hpp"
#include "mfic/mining.hpp"
#include "mfic/preprocess.hpp"
#include "mfic/serialize.hpp"
#include "mfic/vectorspace.hpp"

namespace fs = std::filesystem;
using mfic::Json;

namespace {

struct Config {
    std::string stopwords_path;
    double df_threshold = 0.8;
    int tf_support = 1;
    int minsup = 2;
    double alpha = 0.8;
    bool closure = true;
    int max_levels = 32;
    std::string output_dir = ".";
    int threads = static_cast<int>(std::thread::hardware_concurrency());
};

Json config_to_json(const Config& c) {
    return Json{{"stopwords_path", c.stopwords_path},
                {"df_threshold", c.df_threshold},
                {"tf_support", c.tf_support},
                {"minsup", c.minsup},
                {"alpha", c.alpha},
                {"closure", c.closure},
                {"max_levels", c.max_levels},
                {"output_dir", c.output_dir},
                {"threads", c.threads}};
}

void apply_config_file(const std::string& path, Config& c) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    Json j = Json::parse(in);
    if (j.contains("stopwords_path")) c.stopwords_path = j["stopwords_path"];
    if (j.contains("df_threshold")) c.df_threshold = j["df_threshold"];
    if (j.contains("tf_support")) c.tf_support = j["tf_support"];
    if (j.contains("minsup")) c.minsup = j["minsup"];
    if (j.contains("alpha")) c.alpha = j["alpha"];
    if (j.contains("closure")) c.closure = j["closure"];
    if (j.contains("max_levels")) c.max_levels = j["max_levels"];
    if (j.contains("output_dir")) c.output_dir = j["output_dir"];
    if (j.contains("threads")) c.threads = j["threads"];
}

void validate(const Config& c) {
    if (!(c.df_threshold > 0.0 && c.df_threshold <= 1.0))
        throw mfic::DomainError("--df-threshold must be in (0,1]");
    if (!(c.alpha > 0.0 && c.alpha <= 1.0))
        throw mfic::DomainError("--alpha must be in (0,1]");
    if (c.tf_support < 0) throw mfic::DomainError("--tf-support must be >= 0");
    if (c.minsup < 1) throw mfic::DomainError("--minsup must be >= 1");
    if (c.max_levels < 1) throw mfic::DomainError("--max-levels must be >= 1");
    if (c.threads < 1) throw mfic::DomainError("--threads must be >= 1");
}

struct IngestedCorpus {
    std::vector<mfic::RawDocument> docs;
    std::vector<std::string> skipped;  // undecodable files
};

// Deterministic ids: sorted path order; .html/.htm get kind=html.
IngestedCorpus ingest_dir(const std::string& dir) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec))
        throw std::runtime_error("not a readable directory: " + dir);
    std::vector<fs::path> paths;
    for (const auto& entry : fs::recursive_directory_iterator(dir))
        if (entry.is_regular_file()) paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());

    IngestedCorpus corpus;
    for (const auto& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            corpus.skipped.push_back(path.string());
            continue;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        std::string content = buf.str();
        if (!mfic::is_valid_utf8(content)) {
            corpus.skipped.push_back(path.string());
            continue;
        }
        mfic::RawDocument doc;
        doc.id = static_cast<int>(corpus.docs.size());
        doc.source = path.string();
        doc.content = std::move(content);
        std::string ext = path.extension().string();
        doc.kind = (ext == ".html" || ext == ".htm") ? mfic::DocKind::html
                                                     : mfic::DocKind::plain;
        corpus.docs.push_back(std::move(doc));
    }
    if (corpus.docs.empty()) throw std::runtime_error("no documents in " + dir);
    return corpus;
}

mfic::Stoplist resolve_stopwords(const Config& c) {
    if (c.stopwords_path.empty()) return mfic::default_stopwords();
    return mfic::load_stopwords(c.stopwords_path);
}

std::vector<mfic::TokenizedDocument> tokenize_corpus(
    const IngestedCorpus& corpus, const mfic::Stoplist& stoplist) {
    std::vector<mfic::TokenizedDocument> docs;
    docs.reserve(corpus.docs.size());
    for (const auto& raw : corpus.docs)
        docs.push_back(mfic::preprocess_document(raw, stoplist));
    return docs;
}

void write_json(const fs::path& path, const Json& j) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

Json manifest_json(const IngestedCorpus& corpus,
                   const std::vector<mfic::TokenizedDocument>& docs,
                   const Config& cfg) {
    Json manifest;
    manifest["config"] = config_to_json(cfg);
    Json list = Json::array();
    for (std::size_t i = 0; i < corpus.docs.size(); ++i) {
        list.push_back(
            {{"id", corpus.docs[i].id},
             {"path", corpus.docs[i].source},
             {"kind", corpus.docs[i].kind == mfic::DocKind::html ? "html"
                                                                 : "plain"},
             {"tokens", static_cast<int>(docs[i].tokens.size())}});
    }
    manifest["docs"] = list;
    manifest["skipped"] = corpus.skipped;
    return manifest;
}

std::string timestamp_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

int cmd_ingest(const std::string& corpus_dir, const Config& cfg) {
    IngestedCorpus corpus;
    try {
        corpus = ingest_dir(corpus_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    auto docs = tokenize_corpus(corpus, resolve_stopwords(cfg));
    write_json(fs::path(cfg.output_dir) / "manifest.json",
               manifest_json(corpus, docs, cfg));
    for (const auto& path : corpus.skipped)
        std::cerr << "warning: skipped undecodable file " << path << '\n';
    std::cout << "ingested " << corpus.docs.size() << " documents ("
              << corpus.skipped.size() << " skipped)\n";
    return 0;
}

struct BuiltCorpus {
    IngestedCorpus corpus;
    std::vector<mfic::TokenizedDocument> docs;
    mfic::CorpusMatrix matrix;
};

BuiltCorpus build_corpus(const std::string& corpus_dir, const Config& cfg) {
    BuiltCorpus built;
    built.corpus = ingest_dir(corpus_dir);
    built.docs = tokenize_corpus(built.corpus, resolve_stopwords(cfg));
    auto vocab = mfic::build_vocabulary(built.docs, cfg.df_threshold);
    built.matrix = mfic::build_vectors(built.docs, vocab);
    return built;
}

int cmd_cluster(const std::string& corpus_dir, const Config& cfg,
                bool dump_matrix, bool dump_itemsets) {
    BuiltCorpus built;
    try {
        built = build_corpus(corpus_dir, cfg);
    } catch (const mfic::EmptyVocabularyError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    mfic::HierarchyConfig hc;
    hc.tf_support = cfg.tf_support;
    hc.minsup = cfg.minsup;
    hc.max_levels = cfg.max_levels;
    mfic::HierarchyTree tree = mfic::build_hierarchy(built.matrix, hc);

    fs::path out(cfg.output_dir);
    write_json(out / "manifest.json",
               manifest_json(built.corpus, built.docs, cfg));
    Json tree_json = mfic::tree_to_json(tree);
    tree_json["config"] = config_to_json(cfg);
    write_json(out / "hierarchy.json", tree_json);

    if (dump_matrix) {
        Json mj = mfic::matrix_to_json(built.matrix);
        mj["config"] = config_to_json(cfg);
        write_json(out / "matrix.json", mj);
    }
    if (dump_itemsets) {
        mfic::TransactionDB db =
            mfic::build_transactions(built.matrix, cfg.tf_support);
        Json ij = mfic::itemsets_to_json(mfic::mine(db, cfg.minsup));
        ij["config"] = config_to_json(cfg);
        write_json(out / "itemsets.json", ij);
    }

    Json summary;
    summary["config"] = config_to_json(cfg);
    Json level_counts = Json::array();
    for (const auto& level : tree.levels)
        level_counts.push_back(static_cast<int>(level.size()));
    summary["level_node_counts"] = level_counts;
    Json mfi_counts = Json::array();
    for (const auto& lr : tree.level_diagnostics)
        mfi_counts.push_back(lr.mfi_count);
    summary["level_mfi_counts"] = mfi_counts;
    summary["root"] = tree.root;
    summary["timestamp"] = timestamp_now();
    write_json(out / "summary.json", summary);

    std::cout << "hierarchy of " << tree.levels.size() << " levels over "
              << built.matrix.m << " documents\n";
    return 0;
}

int cmd_dedup(const std::string& corpus_dir, const std::string& matrix_file,
              const Config& cfg) {
    mfic::DedupReport report;
    std::vector<std::string> sources;
    if (!matrix_file.empty()) {
        mfic::SimilarityMatrix sim;
        try {
            std::ifstream in(matrix_file);
            if (!in)
                throw mfic::DomainError("cannot open matrix file: " +
                                        matrix_file);
            sim = mfic::similarity_from_json(Json::parse(in));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 4;
        }
        report = mfic::dedup_report(sim, cfg.alpha, cfg.closure);
    } else {
        BuiltCorpus built;
        try {
            built = build_corpus(corpus_dir, cfg);
        } catch (const mfic::EmptyVocabularyError& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 3;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        }
        for (const auto& raw : built.corpus.docs)
            sources.push_back(raw.source);
        report =
            mfic::dedup_report(built.matrix, cfg.alpha, cfg.closure, cfg.threads);
    }
    Json rj = mfic::report_to_json(report, sources);
    rj["config"] = config_to_json(cfg);
    write_json(fs::path(cfg.output_dir) / "report.json", rj);
    std::cout << report.groups.size() << " duplicate groups, "
              << report.singletons.size() << " singletons\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MFI-seeded hierarchical document clustering and "
                 "near-duplicate detection"};
    app.require_subcommand(1);

    Config cfg;
    std::string config_file;
    std::string corpus_dir;
    std::string matrix_file;
    bool dump_matrix = false;
    bool dump_itemsets = false;
    if (cfg.threads < 1) cfg.threads = 1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_file, "JSON config file");
        sub->add_option("--stopwords", cfg.stopwords_path, "stopword file");
        sub->add_option("--df-threshold", cfg.df_threshold,
                        "df cut as a fraction of M, in (0,1]");
        sub->add_option("--tf-support", cfg.tf_support,
                        "keyword rule: tf > tf-support");
        sub->add_option("--minsup", cfg.minsup, "Apriori minimum support");
        sub->add_option("--alpha", cfg.alpha, "similarity cut threshold");
        sub->add_flag("--closure,!--no-closure", cfg.closure,
                      "max-min transitive closure before the cut");
        sub->add_option("--max-levels", cfg.max_levels, "hierarchy level cap");
        sub->add_option("--output-dir,-o", cfg.output_dir, "artifact directory");
        sub->add_option("--threads", cfg.threads, "parallelism bound");
    };

    CLI::App* ingest = app.add_subcommand("ingest", "scan a corpus directory");
    ingest->add_option("corpus_dir", corpus_dir)->required();
    add_common(ingest);

    CLI::App* cluster =
        app.add_subcommand("cluster", "build the cluster hierarchy");
    cluster->add_option("corpus_dir", corpus_dir)->required();
    cluster->add_flag("--dump-matrix", dump_matrix, "write matrix.json");
    cluster->add_flag("--dump-itemsets", dump_itemsets, "write itemsets.json");
    add_common(cluster);

    CLI::App* dedup = app.add_subcommand("dedup", "detect near-duplicates");
    dedup->add_option("corpus_dir", corpus_dir);
    dedup->add_option("--matrix", matrix_file,
                      "similarity matrix JSON instead of a corpus");
    add_common(dedup);

    CLI::App* pipeline =
        app.add_subcommand("pipeline", "cluster then dedup the same corpus");
    pipeline->add_option("corpus_dir", corpus_dir)->required();
    pipeline->add_flag("--dump-matrix", dump_matrix, "write matrix.json");
    pipeline->add_flag("--dump-itemsets", dump_itemsets, "write itemsets.json");
    add_common(pipeline);

    CLI11_PARSE(app, argc, argv);

    try {
        // config file first, then flags override it
        if (!config_file.empty()) {
            Config from_file = cfg;
            apply_config_file(config_file, from_file);
            CLI::App* sub = app.get_subcommands().front();
            auto keep = [&](const std::string& flag) {
                return sub->count(flag) > 0;
            };
            if (!keep("--stopwords")) cfg.stopwords_path = from_file.stopwords_path;
            if (!keep("--df-threshold")) cfg.df_threshold = from_file.df_threshold;
            if (!keep("--tf-support")) cfg.tf_support = from_file.tf_support;
            if (!keep("--minsup")) cfg.minsup = from_file.minsup;
            if (!keep("--alpha")) cfg.alpha = from_file.alpha;
            if (!keep("--closure") && !keep("--no-closure"))
                cfg.closure = from_file.closure;
            if (!keep("--max-levels")) cfg.max_levels = from_file.max_levels;
            if (!keep("--output-dir")) cfg.output_dir = from_file.output_dir;
            if (!keep("--threads")) cfg.threads = from_file.threads;
        }
        validate(cfg);

        if (app.got_subcommand("ingest")) return cmd_ingest(corpus_dir, cfg);
        if (app.got_subcommand("cluster"))
            return cmd_cluster(corpus_dir, cfg, dump_matrix, dump_itemsets);
        if (app.got_subcommand("dedup")) {
            if (corpus_dir.empty() == matrix_file.empty()) {
                std::cerr << "error: dedup needs exactly one of corpus_dir or "
                             "--matrix\n";
                return 4;
            }
            return cmd_dedup(corpus_dir, matrix_file, cfg);
        }
        if (app.got_subcommand("pipeline")) {
            int rc = cmd_cluster(corpus_dir, cfg, dump_matrix, dump_itemsets);
            if (rc != 0) return rc;
            return cmd_dedup(corpus_dir, "", cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
