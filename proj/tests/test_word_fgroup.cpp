#include <doctest.h>

#include <random>

#include "gssp/fgroup.hpp"
#include "gssp/word.hpp"

using namespace gssp;

namespace {
const IntMatrix X0({{2, 1}, {1, 1}});
const FGroup F(X0);

FElement elem(std::int64_t t, BigInt a, BigInt b) {
    return FElement{t, IntVector({std::move(a), std::move(b)})};
}
}  // namespace

TEST_CASE("alphabets reject duplicates and empty names") {
    CHECK_THROWS_AS(Alphabet({"x", "x"}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({"x", ""}), std::invalid_argument);
    const Alphabet a({"x", "e1"});
    CHECK(a.index("e1") == 1);
    CHECK_THROWS_AS(a.index("e2"), std::invalid_argument);
}

TEST_CASE("word parse/print round-trips on normalized words") {
    for (const char* text : {"x^-3 e2 x^3", "x e1 x^-1", "e1^5", "", "x^2 e1^-2 x^2"}) {
        const Word w = Word::parse(F.alphabet(), text);
        CHECK(w.to_string(F.alphabet()) == text);
        CHECK(Word::parse(F.alphabet(), w.to_string(F.alphabet())) == w);
    }
}

TEST_CASE("word normalization merges letters and tracks raw length") {
    const Word w = Word::parse(F.alphabet(), "x x x^-1 e1^0 e2");
    CHECK(w.to_string(F.alphabet()) == "x e2");
    CHECK(w.length() == 2);
    CHECK(w.raw_length() == 4);  // as written, zero exponents contribute nothing
    const Word collapsed = Word::parse(F.alphabet(), "x x^-1");
    CHECK(collapsed.empty());
    CHECK(collapsed.raw_length() == 2);
}

TEST_CASE("word parse rejects bad input") {
    CHECK_THROWS_AS(Word::parse(F.alphabet(), "y"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse(F.alphabet(), "x^"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse(F.alphabet(), "x^two"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse(F.alphabet(), "x^2z"), std::invalid_argument);
}

TEST_CASE("word inverse and powers") {
    const Word w = Word::parse(F.alphabet(), "x e1^2 x^-1");
    CHECK(w.inverse().to_string(F.alphabet()) == "x e1^-2 x^-1");
    CHECK(w.concat(w.inverse()).empty());
    CHECK(w.pow(0).empty());
    CHECK(w.pow(2).to_string(F.alphabet()) == "x e1^4 x^-1");  // inner x^-1 x cancels
    CHECK(w.pow(-1) == w.inverse());
}

TEST_CASE("f_mul pinned examples") {
    CHECK(f_mul(F, elem(1, 0, 0), elem(0, 1, 0)) == elem(1, 1, 0));
    CHECK(f_mul(F, elem(0, 1, 0), elem(1, 0, 0)) == elem(1, 2, 1));  // X0 e1 = (2,1)
    const FElement a = elem(3, 5, -7);
    CHECK(f_mul(F, a, f_identity(F)) == a);
    CHECK_THROWS_AS(f_mul(F, FElement{0, IntVector(3)}, f_identity(F)), std::invalid_argument);
}

TEST_CASE("f_inv pinned examples") {
    CHECK(f_inv(F, f_identity(F)) == f_identity(F));
    CHECK(f_inv(F, elem(1, 0, 0)) == elem(-1, 0, 0));
    CHECK(f_inv(F, elem(0, 2, 1)) == elem(0, -2, -1));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const FElement a = elem(static_cast<std::int64_t>(rng() % 9) - 4,
                                BigInt(rng() % 19) - 9, BigInt(rng() % 19) - 9);
        CHECK(f_is_identity(f_mul(F, a, f_inv(F, a))));
        CHECK(f_is_identity(f_mul(F, f_inv(F, a), a)));
    }
}

TEST_CASE("evaluate pinned examples") {
    CHECK(evaluate(F, Word::parse(F.alphabet(), "x^-1 e1 x")) == elem(0, 2, 1));
    CHECK(evaluate(F, Word::parse(F.alphabet(), "")) == f_identity(F));
    CHECK(evaluate(F, Word::parse(F.alphabet(), "x e1 x^-1")) == elem(0, 1, -1));
}

TEST_CASE("word_problem pinned examples") {
    CHECK(word_problem(F, Word::parse(F.alphabet(), "e1 e2 e1^-1 e2^-1")));
    CHECK_FALSE(word_problem(F, Word::parse(F.alphabet(), "x^-1 e1 x e1^-1")));
    CHECK(word_problem(F, Word::parse(F.alphabet(), "x^3 x^-3")));
}

namespace {
Word random_f_word(std::mt19937_64& rng, std::size_t len) {
    Word w;
    for (std::size_t i = 0; i < len; ++i) w.append(rng() % 3, rng() % 2 ? 1 : -1);
    return w;
}
}  // namespace

TEST_CASE("evaluation is a homomorphism") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
        const std::size_t lu = rng() % 30;
        const Word u = random_f_word(rng, lu);
        const std::size_t lv = rng() % 30;
        const Word v = random_f_word(rng, lv);
        CHECK(evaluate(F, u.concat(v)) == f_mul(F, evaluate(F, u), evaluate(F, v)));
    }
}

TEST_CASE("reverse-inverse words solve the word problem") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 100; ++i) {
        const std::size_t len = rng() % 40;
        const Word w = random_f_word(rng, len);
        CHECK(word_problem(F, w.concat(w.inverse())));
    }
}

TEST_CASE("f_mul is associative") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        const FElement a = evaluate(F, random_f_word(rng, 10));
        const FElement b = evaluate(F, random_f_word(rng, 10));
        const FElement c = evaluate(F, random_f_word(rng, 10));
        CHECK(f_mul(F, f_mul(F, a, b), c) == f_mul(F, a, f_mul(F, b, c)));
    }
}

TEST_CASE("entry bit-size grows at most linearly in word length") {
    std::mt19937_64 rng(31);
    // fit the slope c on short words; bitsize <= c|w| + c must then hold at
    // length 10^4
    double c = 1.0;
    for (int i = 0; i < 20; ++i) {
        const Word w = random_f_word(rng, 200);
        const FElement e = evaluate(F, w);
        c = std::max(c, static_cast<double>(e.v.max_entry_bits() + 1) / 201.0);
    }
    const Word big = random_f_word(rng, 10'000);
    const FElement e = evaluate(F, big);
    CHECK(static_cast<double>(e.v.max_entry_bits()) <= c * 10'000.0 + c);
}

TEST_CASE("FGroup rejects non-unimodular actions") {
    CHECK_THROWS_AS(FGroup(IntMatrix({{2, 0}, {0, 1}})), std::invalid_argument);
    CHECK(F.alphabet().names() == std::vector<std::string>{"x", "e1", "e2"});
}
