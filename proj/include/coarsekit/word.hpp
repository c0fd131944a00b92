#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coarsekit/errors.hpp"

namespace coarsekit {

// Letters are nonzero signed bytes: +k is generator k-1, -k its inverse.
using Letter = std::int8_t;

inline Letter inverse_letter(Letter l) { return static_cast<Letter>(-l); }
inline int generator_of(Letter l) { return (l > 0 ? l : -l) - 1; }

// Shortlex letter order: a < a^-1 < b < b^-1 < ...
inline int letter_rank(Letter l) { return 2 * generator_of(l) + (l < 0 ? 1 : 0); }
inline Letter letter_from_rank(int rank) {
    int gen = rank / 2 + 1;
    return static_cast<Letter>(rank % 2 ? -gen : gen);
}

/// A freely reduced word over a fixed generating set. The default-constructed
/// word is the identity.
class Word {
public:
    Word() = default;

    /// Accepts only freely reduced input; use reduce() for raw letter runs.
    explicit Word(std::vector<Letter> letters);

    static Word reduce(const std::vector<Letter>& raw);

    const std::vector<Letter>& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    Letter at(int i) const { return letters_[static_cast<std::size_t>(i)]; }
    Letter back() const { return letters_.back(); }

    Word prefix(int n) const;
    Word inverse() const;
    Word append(Letter l) const;           // reduced product w * l

    static Word concat(const Word& a, const Word& b);   // reduced product

    /// Raw bytes, usable as a hash key.
    std::string bytes() const { return std::string(letters_.begin(), letters_.end()); }

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return letters_ != o.letters_; }

private:
    struct reduced_tag {};
    Word(std::vector<Letter> letters, reduced_tag) : letters_(std::move(letters)) {}

    std::vector<Letter> letters_;
};

bool shortlex_less(const Word& a, const Word& b);
int common_prefix_length(const Word& a, const Word& b);

/// Word metric distance in the free group: |u| + |v| - 2*(common prefix).
int tree_distance(const Word& u, const Word& v);

/// Vertices along the unique geodesic from u to v in the free group,
/// endpoints included.
std::vector<Word> tree_geodesic(const Word& u, const Word& v);

} // namespace coarsekit
