#include "gssp/word.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace gssp {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw std::invalid_argument("Alphabet: empty generator name");
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("Alphabet: duplicate generator name '" + names_[i] + "'");
    }
}

std::size_t Alphabet::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw std::invalid_argument("Alphabet: unknown generator name '" + name + "'");
    return it->second;
}

Word Word::parse(const Alphabet& alphabet, const std::string& text) {
    Word w;
    std::istringstream is(text);
    std::string token;
    while (is >> token) {
        std::string name = token;
        std::int64_t exp = 1;
        if (auto caret = token.find('^'); caret != std::string::npos) {
            name = token.substr(0, caret);
            const std::string exp_text = token.substr(caret + 1);
            try {
                std::size_t used = 0;
                exp = std::stoll(exp_text, &used);
                if (used != exp_text.size()) throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw std::invalid_argument("Word::parse: bad exponent in token '" + token + "'");
            }
        }
        w.append(alphabet.index(name), exp);
    }
    return w;
}

Word Word::from_letters(const std::vector<Letter>& letters) {
    Word w;
    for (const auto& l : letters) w.append(l.gen, l.exp);
    return w;
}

Word Word::single(std::size_t gen, std::int64_t exp) {
    Word w;
    w.append(gen, exp);
    return w;
}

namespace {
std::uint64_t magnitude(std::int64_t e) {
    return e < 0 ? ~static_cast<std::uint64_t>(e) + 1 : static_cast<std::uint64_t>(e);
}
}  // namespace

std::uint64_t Word::length() const {
    std::uint64_t len = 0;
    for (const auto& l : letters_) len += magnitude(l.exp);
    return len;
}

void Word::append(std::size_t gen, std::int64_t exp) {
    if (exp == 0) return;
    raw_length_ += magnitude(exp);
    if (!letters_.empty() && letters_.back().gen == gen) {
        letters_.back().exp += exp;
        if (letters_.back().exp == 0) letters_.pop_back();
        return;
    }
    letters_.push_back({gen, exp});
}

Word Word::concat(const Word& other) const {
    Word w = *this;
    for (const auto& l : other.letters_) w.append(l.gen, l.exp);
    w.raw_length_ = raw_length_ + other.raw_length_;
    return w;
}

Word Word::inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.append(it->gen, -it->exp);
    w.raw_length_ = raw_length_;
    return w;
}

Word Word::pow(std::int64_t e) const {
    const Word base = e < 0 ? inverse() : *this;
    Word w;
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) w = w.concat(base);
    return w;
}

std::string Word::to_string(const Alphabet& alphabet) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& l : letters_) {
        if (!first) os << ' ';
        first = false;
        os << alphabet.name(l.gen);
        if (l.exp != 1) os << '^' << l.exp;
    }
    return os.str();
}

}  // namespace gssp
