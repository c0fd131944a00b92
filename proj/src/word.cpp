#include "coarsekit/word.hpp"

#include <algorithm>

namespace coarsekit {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] == 0)
            throw DomainError("word contains the zero letter");
        if (i > 0 && letters_[i] == static_cast<Letter>(-letters_[i - 1]))
            throw DomainError("word is not freely reduced");
    }
}

Word Word::reduce(const std::vector<Letter>& raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (Letter l : raw) {
        if (l == 0)
            throw DomainError("word contains the zero letter");
        if (!out.empty() && out.back() == static_cast<Letter>(-l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return Word(std::move(out), reduced_tag{});
}

Word Word::prefix(int n) const {
    std::vector<Letter> p(letters_.begin(), letters_.begin() + n);
    return Word(std::move(p), reduced_tag{});
}

Word Word::inverse() const {
    std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
    for (Letter& l : inv)
        l = static_cast<Letter>(-l);
    return Word(std::move(inv), reduced_tag{});
}

Word Word::append(Letter l) const {
    std::vector<Letter> out = letters_;
    if (!out.empty() && out.back() == static_cast<Letter>(-l))
        out.pop_back();
    else
        out.push_back(l);
    return Word(std::move(out), reduced_tag{});
}

Word Word::concat(const Word& a, const Word& b) {
    std::vector<Letter> out = a.letters_;
    for (Letter l : b.letters_) {
        if (!out.empty() && out.back() == static_cast<Letter>(-l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return Word(std::move(out), reduced_tag{});
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    for (int i = 0; i < a.size(); ++i) {
        int ra = letter_rank(a.at(i));
        int rb = letter_rank(b.at(i));
        if (ra != rb)
            return ra < rb;
    }
    return false;
}

int common_prefix_length(const Word& a, const Word& b) {
    int n = std::min(a.size(), b.size());
    int i = 0;
    while (i < n && a.at(i) == b.at(i))
        ++i;
    return i;
}

int tree_distance(const Word& u, const Word& v) {
    return u.size() + v.size() - 2 * common_prefix_length(u, v);
}

std::vector<Word> tree_geodesic(const Word& u, const Word& v) {
    int cp = common_prefix_length(u, v);
    std::vector<Word> path;
    path.reserve(static_cast<std::size_t>(u.size() + v.size() - 2 * cp + 1));
    for (int n = u.size(); n >= cp; --n)
        path.push_back(u.prefix(n));
    for (int n = cp + 1; n <= v.size(); ++n)
        path.push_back(v.prefix(n));
    return path;
}

} // namespace coarsekit
