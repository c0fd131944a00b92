#pragma once

#include <string>
#include <vector>

#include "coarsekit/word.hpp"

namespace coarsekit {

enum class PresentationKind { Free, Dehn, Generic };

std::string kind_name(PresentationKind k);
PresentationKind kind_from_name(const std::string& name);

/// A finite presentation. kind=Free means no relators and an exact word
/// problem via free reduction; kind=Dehn is a user-declared Dehn presentation
/// (greedy relator replacement decides the word problem); kind=Generic gets
/// ball construction by windowed relator closure, sound but possibly
/// incomplete identifications.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    PresentationKind kind = PresentationKind::Free;

    int rank() const { return static_cast<int>(generators.size()); }
    int generator_index(const std::string& name) const;   // -1 if unknown

    void validate() const;

    static Presentation free_group(int rank);
    static Presentation parse(const std::string& text);
    static Presentation load(const std::string& path);
};

/// Parses a whitespace-separated token word ("a b^-1 a^2"); "1" or the empty
/// string is the identity. Returns raw (unreduced) letters.
std::vector<Letter> parse_letters(const Presentation& p, const std::string& text);

/// parse_letters followed by free reduction.
Word parse_word(const Presentation& p, const std::string& text);

std::string format_word(const Presentation& p, const Word& w);

/// Free reduction, plus Dehn reduction for kind=Dehn: any subword covering
/// more than half of a cyclic relator (or inverse) is replaced by the shorter
/// complement until no such subword remains.
Word reduce_word(const Presentation& p, const std::vector<Letter>& raw);

/// One-sided word problem for kind in {Free, Dehn}: is w trivial?
bool dehn_trivial(const Presentation& p, const Word& w);

/// Dehn reduction pass used by reduce_word; exposed for tests.
Word dehn_reduce(const Presentation& p, const Word& w);

} // namespace coarsekit
