#include "eulersum/jsonio.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace eulersum {

const char* kAlphaCacheVersion = "alpha-cache-1";

Json lincomb_to_json(const LinComb& u) {
    Json arr = Json::array();
    for (auto& [w, c] : u.t)
        arr.push_back(Json{{"coeff", rat_to_string(c)}, {"word", w.to_string()}});
    return arr;
}

LinComb lincomb_from_json(const Json& j) {
    LinComb u;
    for (auto& item : j)
        u.add_term(Word::parse(item.at("word").get<std::string>()),
                   rat_from_string(item.at("coeff").get<std::string>()));
    return u;
}

Json alpha_to_json(const AlphaMatrix& a) {
    Json j;
    j["weight"] = a.k;
    j["depth"] = a.d;
    Json basis = Json::array(), nonbasis = Json::array();
    for (auto& b : a.basis) basis.push_back(b.to_string());
    for (auto& n : a.nonbasis) nonbasis.push_back(n.to_string());
    j["basis"] = basis;
    j["nonbasis"] = nonbasis;
    Json rows = Json::array();
    for (size_t i = 0; i < a.alpha.nrows; ++i) {
        Json row = Json::array();
        for (size_t c = 0; c < a.alpha.ncols; ++c) row.push_back(rat_to_string(a.alpha.at(i, c)));
        rows.push_back(row);
    }
    j["alpha"] = rows;
    j["det_square"] = a.det_square.get_str();
    j["denominator_lcm"] = a.denominator_lcm.get_str();
    Json fac = Json::object();
    for (auto& [p, e] : a.lcm_factorization) fac[p.get_str()] = e;
    j["lcm_factorization"] = fac;
    j["all_denominators_odd"] = a.all_denominators_odd;
    return j;
}

AlphaMatrix alpha_from_json(const Json& j) {
    AlphaMatrix a;
    a.k = j.at("weight").get<int>();
    a.d = j.at("depth").get<int>();
    for (auto& s : j.at("basis")) a.basis.push_back(Index::parse(s.get<std::string>()));
    for (auto& s : j.at("nonbasis")) a.nonbasis.push_back(Index::parse(s.get<std::string>()));
    const auto& rows = j.at("alpha");
    a.alpha = RatMat(a.nonbasis.size(), a.basis.size());
    for (size_t i = 0; i < a.alpha.nrows; ++i)
        for (size_t c = 0; c < a.alpha.ncols; ++c)
            a.alpha.at(i, c) = rat_from_string(rows.at(i).at(c).get<std::string>());
    a.det_square = Int(j.at("det_square").get<std::string>());
    a.denominator_lcm = Int(j.at("denominator_lcm").get<std::string>());
    for (auto& [p, e] : j.at("lcm_factorization").items())
        a.lcm_factorization.emplace_back(Int(p), e.get<int>());
    a.all_denominators_odd = j.at("all_denominators_odd").get<bool>();
    return a;
}

std::string alpha_to_csv(const AlphaMatrix& a) {
    std::ostringstream os;
    os << "index";
    for (auto& b : a.basis) os << ",\"" << b.to_string() << "\"";
    os << "\n";
    for (size_t i = 0; i < a.alpha.nrows; ++i) {
        os << "\"" << a.nonbasis[i].to_string() << "\"";
        for (size_t c = 0; c < a.alpha.ncols; ++c) os << "," << rat_to_string(a.alpha.at(i, c));
        os << "\n";
    }
    return os.str();
}

Json assembled_to_json(const Assembled& a) {
    Json j;
    j["weight"] = a.k;
    j["depth"] = a.d;
    Json nb = Json::array(), bs = Json::array();
    for (auto& n : a.nonbasis) nb.push_back(n.to_string());
    for (auto& b : a.basis) bs.push_back(b.to_string());
    j["nonbasis"] = nb;
    j["basis"] = bs;
    auto dump = [](const IntMat& m) {
        Json rows = Json::array();
        for (auto& r : m) {
            Json row = Json::array();
            for (auto& v : r) row.push_back(v.get_str());
            rows.push_back(row);
        }
        return rows;
    };
    j["square"] = dump(a.square);
    j["basis_block"] = dump(a.basis_block);
    j["triangularity_violations"] = a.triangularity_violations;
    return j;
}

namespace {

std::string cache_path(int k, int d, const std::string& dir) {
    return dir + "/alpha_k" + std::to_string(k) + "_d" + std::to_string(d) + ".json";
}

}  // namespace

bool save_alpha_cache(const AlphaMatrix& a, const std::string& cache_dir) {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    Json j = alpha_to_json(a);
    j["cache_version"] = kAlphaCacheVersion;
    std::ofstream out(cache_path(a.k, a.d, cache_dir));
    if (!out) return false;
    out << j.dump(1) << "\n";
    return static_cast<bool>(out);
}

bool load_alpha_cache(int k, int d, const std::string& cache_dir, AlphaMatrix& out) {
    std::ifstream in(cache_path(k, d, cache_dir));
    if (!in) return false;
    Json j;
    try {
        in >> j;
        if (j.value("cache_version", std::string()) != kAlphaCacheVersion) return false;
        out = alpha_from_json(j);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

}  // namespace eulersum
