#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "eulersum/golden33.hpp"
#include "eulersum/goncharov.hpp"
#include "eulersum/jsonio.hpp"
#include "eulersum/numerics.hpp"

namespace es = eulersum;

namespace {

struct Config {
    int precision_digits = 40;
    int parallelism = 0;  // 0 = hardware
    std::string cache_dir = ".eulersum-cache";
    std::string output_format = "json";  // json | csv | pretty
    int max_weight = 8;                  // safety ceiling
};

int threads_of(const Config& cfg) {
    if (cfg.parallelism > 0) return cfg.parallelism;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void load_config_file(Config& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("config", "cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("config", "bad config line: " + line);
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        if (key == "precision_digits") cfg.precision_digits = std::stoi(val);
        else if (key == "parallelism") cfg.parallelism = std::stoi(val);
        else if (key == "cache_dir") cfg.cache_dir = val;
        else if (key == "output_format") cfg.output_format = val;
        else if (key == "max_weight") cfg.max_weight = std::stoi(val);
        else throw CLI::ValidationError("config", "unknown config key: " + key);
    }
}

void apply_env(Config& cfg) {
    if (const char* v = std::getenv("EULERSUM_CACHE_DIR")) cfg.cache_dir = v;
    if (const char* v = std::getenv("EULERSUM_PARALLEL")) cfg.parallelism = std::atoi(v);
}

void check_weight(const Config& cfg, int k) {
    if (k < 0) throw CLI::ValidationError("weight", "weight must be nonnegative");
    if (k > cfg.max_weight)
        throw CLI::ValidationError(
            "weight", "weight exceeds the safety ceiling (raise --max-weight to override)");
}

es::AlphaMatrix alpha_for(const Config& cfg, int k, int d, bool use_cache) {
    es::AlphaMatrix a;
    if (use_cache && es::load_alpha_cache(k, d, cfg.cache_dir, a)) return a;
    es::RelationTable table(k);
    es::Assembled s = es::assemble(k, d, table, threads_of(cfg));
    a = es::solve_alpha(s);
    if (use_cache) es::save_alpha_cache(a, cfg.cache_dir);
    return a;
}

void print_alpha(const Config& cfg, const es::AlphaMatrix& a) {
    if (cfg.output_format == "csv") {
        std::cout << es::alpha_to_csv(a);
    } else if (cfg.output_format == "pretty") {
        std::cout << "weight " << a.k << ", depth " << a.d << "\n";
        std::cout << "basis:";
        for (auto& b : a.basis) std::cout << " (" << b.to_string() << ")";
        std::cout << "\n";
        for (size_t i = 0; i < a.alpha.nrows; ++i) {
            std::cout << "(" << a.nonbasis[i].to_string() << ") ->";
            for (size_t j = 0; j < a.alpha.ncols; ++j)
                std::cout << " " << es::rat_to_string(a.alpha.at(i, j));
            std::cout << "\n";
        }
        std::cout << "denominator lcm: " << a.denominator_lcm.get_str() << "\n";
    } else {
        std::cout << es::alpha_to_json(a).dump(1) << "\n";
    }
}

int cmd_enumerate(const Config& cfg, int k, int d, const std::string& cls) {
    check_weight(cfg, k);
    es::IndexClass c = es::IndexClass::All;
    if (cls == "d") c = es::IndexClass::D;
    else if (cls == "y") c = es::IndexClass::Y;
    else if (cls == "nond") c = es::IndexClass::NonD;
    else if (cls != "all") throw CLI::ValidationError("class", "expected all|d|y|nond");
    auto list = es::enumerate_indices(k, d, c);
    es::Json arr = es::Json::array();
    for (auto& idx : list)
        arr.push_back(es::Json{{"index", idx.to_string()},
                               {"weight", idx.weight()},
                               {"depth", idx.depth()},
                               {"in_d", idx.in_D()},
                               {"in_y", idx.in_Y()}});
    std::cout << arr.dump(1) << "\n";
    return 0;
}

int cmd_alpha(const Config& cfg, int k, int d, bool no_cache) {
    check_weight(cfg, k);
    print_alpha(cfg, alpha_for(cfg, k, d, !no_cache));
    return 0;
}

int cmd_reduce(const Config& cfg, const std::string& index_str, int d, bool no_cache) {
    es::Index idx = es::Index::parse(index_str);
    check_weight(cfg, idx.weight());
    int depth = d < 0 ? idx.depth() : d;
    if (depth < idx.depth())
        throw CLI::ValidationError("depth", "depth bound below the index depth");
    es::AlphaMatrix a = alpha_for(cfg, idx.weight(), depth, !no_cache);
    es::Json j;
    j["index"] = idx.to_string();
    j["weight"] = idx.weight();
    j["depth"] = depth;
    es::Json basis = es::Json::array(), row = es::Json::array();
    for (auto& b : a.basis) basis.push_back(b.to_string());
    if (idx.in_D()) {
        for (auto& b : a.basis) row.push_back(b == idx ? "1" : "0");
    } else {
        auto it = std::find(a.nonbasis.begin(), a.nonbasis.end(), idx);
        if (it == a.nonbasis.end()) throw std::runtime_error("index missing from the table");
        size_t i = it - a.nonbasis.begin();
        for (size_t c = 0; c < a.alpha.ncols; ++c)
            row.push_back(es::rat_to_string(a.alpha.at(i, c)));
    }
    j["basis"] = basis;
    j["coefficients"] = row;
    std::cout << j.dump(1) << "\n";
    return 0;
}

int cmd_relations(const Config& cfg, int k, int d) {
    check_weight(cfg, k);
    es::RelationTable table(k);
    auto gens = es::enumerate_indices(k, d, es::IndexClass::NonD);
    table.ensure_rows(gens, threads_of(cfg));
    es::Confluence cf;
    es::Json arr = es::Json::array();
    for (auto& g : gens) {
        es::Json item;
        item["generator_index"] = g.to_string();
        item["element"] = es::lincomb_to_json(cf.relation_for(g));
        arr.push_back(item);
    }
    std::cout << arr.dump(1) << "\n";
    return 0;
}

int cmd_verify(const Config& cfg, int k, int d) {
    check_weight(cfg, k);
    es::RelationTable table(k);
    auto gens = es::enumerate_indices(k, d, es::IndexClass::NonD);
    table.ensure_rows(gens, threads_of(cfg));
    es::Confluence cf;
    es::Numerics num{es::PrecisionContext(cfg.precision_digits)};
    bool all_pass = true;
    for (auto& g : gens) {
        auto res = num.verify(cf.relation_for(g));
        std::cout << (res.pass ? "PASS" : "FAIL") << " (" << g.to_string()
                  << ") residual ~ 10^" << res.residual.err_exponent10()
                  << " |value| <= " << res.residual.abs().to_decimal(cfg.precision_digits - 5)
                  << "\n";
        all_pass = all_pass && res.pass;
    }
    std::cout << (all_pass ? "all relations pass" : "verification FAILED") << "\n";
    return all_pass ? 0 : 1;
}

int cmd_eval(const Config& cfg, const std::string& word_str, const std::string& index_str,
             bool zeta, bool modified) {
    es::Numerics num{es::PrecisionContext(cfg.precision_digits)};
    es::BigReal v(0, 0, num.ctx().fbits);
    std::string label;
    if (!word_str.empty()) {
        es::Word w = es::Word::parse(word_str);
        v = num.eval_L1(w);
        label = "L1(" + word_str + ")";
    } else if (!index_str.empty()) {
        es::Index idx = es::Index::parse(index_str);
        check_weight(cfg, idx.weight());
        if (zeta) {
            v = num.eval_zeta(idx, modified);
            label = (modified ? "zeta~(" : "zeta(") + index_str + ")";
        } else {
            es::LinComb w = es::index_to_word(idx, modified);
            v = num.eval_L1(w);
            label = "L1(w" + std::string(modified ? "~" : "") + "(" + index_str + "))";
        }
    } else {
        throw CLI::ValidationError("eval", "need --word or --index");
    }
    std::cout << label << " = " << v.to_decimal(cfg.precision_digits) << "  (error <= 10^"
              << v.err_exponent10() << ")\n";
    return 0;
}

int cmd_golden_check(const Config&) {
    es::golden33::CheckReport rep = es::golden33::run_check();
    std::cout << "recomputing the weight-3 reference reduction\n" << rep.report;
    std::cout << (rep.ok ? "golden data reproduced exactly" : "golden check FAILED") << "\n";
    return rep.ok ? 0 : 1;
}

int cmd_hopf_selfcheck(const Config&) {
    using namespace es::hopf;
    const std::vector<int> labels{0, 1, 2};
    long checked = 0;
    bool ok = true;
    // all generators of degree <= 3 over three labels (degree 4 runs in the
    // test suite; this is the quick self-check)
    std::vector<std::vector<int>> interiors{{}};
    for (int deg = 0; deg <= 3; ++deg) {
        std::vector<std::vector<int>> next;
        for (auto& base : interiors) {
            if (static_cast<int>(base.size()) == deg) {
                for (int a : labels)
                    for (int b : labels) {
                        Elem x = generator(a, base, b);
                        if (!(coassoc_left(x) == coassoc_right(x))) ok = false;
                        ++checked;
                    }
                for (int l : labels) {
                    auto e = base;
                    e.push_back(l);
                    next.push_back(e);
                }
            }
        }
        interiors = std::move(next);
    }
    std::cout << "coassociativity on " << checked << " generators: "
              << (ok ? "ok" : "FAILED") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact reduction of alternating Euler sums with numeric verification"};
    app.require_subcommand(1);
    app.fallthrough(true);  // global options may follow the subcommand

    Config cfg;
    apply_env(cfg);
    std::string config_path;
    app.add_option("--config", config_path, "key=value config file");
    app.add_option("--precision", cfg.precision_digits, "decimal digits for numerics")
        ->check(CLI::Range(15, 200));
    app.add_option("--parallel", cfg.parallelism, "worker threads (0 = hardware)");
    app.add_option("--cache-dir", cfg.cache_dir, "alpha matrix cache directory");
    app.add_option("--format", cfg.output_format, "json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--max-weight", cfg.max_weight, "safety ceiling for the weight");

    int k = 0, d = -1;
    std::string cls = "all", index_str, word_str;
    bool no_cache = false, zeta = false, modified = false;

    CLI::App* c_enum = app.add_subcommand("enumerate", "list admissible indices");
    c_enum->add_option("--weight", k)->required();
    c_enum->add_option("--depth", d, "depth bound (-1 = unbounded)");
    c_enum->add_option("--class", cls, "all|d|y|nond");

    CLI::App* c_alpha = app.add_subcommand("alpha", "expansion matrix for (weight, depth)");
    c_alpha->add_option("--weight", k)->required();
    c_alpha->add_option("--depth", d)->required();
    c_alpha->add_flag("--no-cache", no_cache);

    CLI::App* c_reduce = app.add_subcommand("reduce", "basis expansion of one index");
    c_reduce->add_option("--index", index_str)->required();
    c_reduce->add_option("--depth", d, "ambient depth bound (default: index depth)");
    c_reduce->add_flag("--no-cache", no_cache);

    CLI::App* c_rel = app.add_subcommand("relations", "generated relation elements");
    c_rel->add_option("--weight", k)->required();
    c_rel->add_option("--depth", d)->required();

    CLI::App* c_verify = app.add_subcommand("verify", "numeric kernel check of all generators");
    c_verify->add_option("--weight", k)->required();
    c_verify->add_option("--depth", d)->required();

    CLI::App* c_eval = app.add_subcommand("eval", "numeric value of a word or index");
    c_eval->add_option("--word", word_str);
    c_eval->add_option("--index", index_str);
    c_eval->add_flag("--zeta", zeta, "use the nested-sum oracle");
    c_eval->add_flag("--modified", modified, "modified normalization (-2)^depth");

    CLI::App* c_golden = app.add_subcommand("golden-check",
                                            "recompute the built-in weight-3 reference");
    CLI::App* c_hopf = app.add_subcommand("hopf-selfcheck", "coproduct structure checks");

    try {
        app.parse(argc, argv);
        if (!config_path.empty()) {
            load_config_file(cfg, config_path);
            // flags win over the file: reparse
            app.clear();
            app.parse(argc, argv);
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (c_enum->parsed()) return cmd_enumerate(cfg, k, d, cls);
        if (c_alpha->parsed()) return cmd_alpha(cfg, k, d, no_cache);
        if (c_reduce->parsed()) return cmd_reduce(cfg, index_str, d, no_cache);
        if (c_rel->parsed()) return cmd_relations(cfg, k, d);
        if (c_verify->parsed()) return cmd_verify(cfg, k, d);
        if (c_eval->parsed()) return cmd_eval(cfg, word_str, index_str, zeta, modified);
        if (c_golden->parsed()) return cmd_golden_check(cfg);
        if (c_hopf->parsed()) return cmd_hopf_selfcheck(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
