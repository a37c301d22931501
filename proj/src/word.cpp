#include "eulersum/word.hpp"

#include <sstream>

namespace eulersum {

std::string letter_token(Letter l) {
    switch (l) {
        case Letter::Zero: return "0";
        case Letter::One: return "1";
        case Letter::MOne: return "-1";
        case Letter::Zvar: return "z";
        case Letter::MZsq: return "-z2";
    }
    throw std::logic_error("bad letter");
}

Letter letter_from_token(const std::string& tok) {
    if (tok == "0") return Letter::Zero;
    if (tok == "1") return Letter::One;
    if (tok == "-1") return Letter::MOne;
    if (tok == "z") return Letter::Zvar;
    if (tok == "-z2") return Letter::MZsq;
    throw std::invalid_argument("bad letter token: '" + tok + "'");
}

std::vector<std::pair<Letter, int>> Word::runs() const {
    std::vector<std::pair<Letter, int>> rs;
    for (Letter l : a) {
        if (!rs.empty() && rs.back().first == l)
            ++rs.back().second;
        else
            rs.emplace_back(l, 1);
    }
    return rs;
}

Word Word::from_runs(const std::vector<std::pair<Letter, int>>& rs) {
    Word w;
    for (auto& [l, n] : rs) {
        if (n < 0) throw std::invalid_argument("negative run exponent");
        w.a.insert(w.a.end(), static_cast<size_t>(n), l);
    }
    return w;
}

std::string Word::to_string() const {
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ',';
        s += letter_token(a[i]);
    }
    return s;
}

Word Word::parse(const std::string& s) {
    Word w;
    if (s.empty()) return w;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        w.a.push_back(letter_from_token(tok));
    if (!mask_fits_some_alphabet(w.letter_mask()))
        throw std::invalid_argument("word mixes alphabets: " + s);
    return w;
}

Word word_of(std::initializer_list<Letter> ls) { return Word(std::vector<Letter>(ls)); }

const Admissibility& Admissibility::A0() {
    static const Admissibility adm{{Letter::Zero}, {Letter::One}};
    return adm;
}

const Admissibility& Admissibility::B() {
    static const Admissibility adm{{Letter::Zero}, {Letter::Zvar}};
    return adm;
}

}  // namespace eulersum
