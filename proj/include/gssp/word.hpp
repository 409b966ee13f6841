#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gssp {

/// Ordered list of distinct generator names.
class Alphabet {
  public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t index(const std::string& name) const;
    bool contains(const std::string& name) const { return index_.count(name) > 0; }
    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

  private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

struct Letter {
    std::size_t gen = 0;
    std::int64_t exp = 0;
    bool operator==(const Letter& other) const = default;
};

/// Free word over an alphabet, stored normalized: adjacent letters have
/// distinct generator indices and every exponent is nonzero. The length as
/// written (pre-merge) is tracked separately since the quantitative bounds
/// are stated against it.
class Word {
  public:
    Word() = default;

    static Word parse(const Alphabet& alphabet, const std::string& text);
    static Word from_letters(const std::vector<Letter>& letters);
    static Word single(std::size_t gen, std::int64_t exp);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    /// Sum of |exponent| over the normalized letters.
    std::uint64_t length() const;
    /// Sum of |exponent| as the word was written, before merging.
    std::uint64_t raw_length() const { return raw_length_; }

    void append(std::size_t gen, std::int64_t exp);
    Word concat(const Word& other) const;
    Word inverse() const;
    Word pow(std::int64_t e) const;

    std::string to_string(const Alphabet& alphabet) const;
    bool operator==(const Word& other) const { return letters_ == other.letters_; }

  private:
    std::vector<Letter> letters_;
    std::uint64_t raw_length_ = 0;
};

}  // namespace gssp
