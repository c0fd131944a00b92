#include "coarsekit/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace coarsekit {

std::string kind_name(PresentationKind k) {
    switch (k) {
    case PresentationKind::Free: return "free";
    case PresentationKind::Dehn: return "dehn";
    case PresentationKind::Generic: return "generic";
    }
    return "free";
}

PresentationKind kind_from_name(const std::string& name) {
    if (name == "free") return PresentationKind::Free;
    if (name == "dehn") return PresentationKind::Dehn;
    if (name == "generic") return PresentationKind::Generic;
    throw DomainError("unknown presentation kind: " + name);
}

int Presentation::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name)
            return static_cast<int>(i);
    return -1;
}

void Presentation::validate() const {
    if (generators.empty())
        throw DomainError("presentation needs at least one generator");
    std::set<std::string> seen;
    for (const auto& g : generators) {
        if (g.empty())
            throw DomainError("empty generator name");
        if (!seen.insert(g).second)
            throw DomainError("duplicate generator name: " + g);
    }
    for (const auto& r : relators) {
        if (r.empty())
            throw DomainError("empty relator");
        for (Letter l : r.letters())
            if (generator_of(l) >= rank())
                throw DomainError("relator uses unknown generator index");
    }
    if (kind == PresentationKind::Free && !relators.empty())
        throw DomainError("a free presentation cannot carry relators");
}

Presentation Presentation::free_group(int rank) {
    Presentation p;
    for (int i = 0; i < rank; ++i) {
        std::string name;
        int k = i;
        do {
            name += static_cast<char>('a' + k % 26);
            k = k / 26 - 1;
        } while (k >= 0);
        p.generators.push_back(name);
    }
    p.kind = PresentationKind::Free;
    p.validate();
    return p;
}

Presentation Presentation::parse(const std::string& text) {
    Presentation p;
    bool kindSet = false;
    bool haveGens = false;
    std::vector<std::string> relatorLines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream probe(line);
        std::string first;
        if (!(probe >> first))
            continue;
        if (first == "kind:" || first.rfind("kind:", 0) == 0) {
            std::string value = first == "kind:" ? "" : first.substr(5);
            if (value.empty() && !(probe >> value))
                throw DomainError("kind line without a value");
            p.kind = kind_from_name(value);
            kindSet = true;
            continue;
        }
        if (!haveGens) {
            std::istringstream gens(line);
            std::string tok;
            if (first == "gens:")
                gens >> tok;    // swallow the prefix
            else
                gens.str(line);
            while (gens >> tok)
                if (tok != "gens:")
                    p.generators.push_back(tok);
            haveGens = true;
            continue;
        }
        relatorLines.push_back(line);
    }
    if (!haveGens)
        throw DomainError("presentation has no generator line");
    for (const auto& rl : relatorLines)
        p.relators.push_back(parse_word(p, rl));
    if (!kindSet)
        p.kind = p.relators.empty() ? PresentationKind::Free : PresentationKind::Generic;
    p.validate();
    return p;
}

Presentation Presentation::load(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw DomainError("cannot open presentation file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse(buf.str());
}

std::vector<Letter> parse_letters(const Presentation& p, const std::string& text) {
    std::vector<Letter> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "1")
            continue;
        std::string name = tok;
        long exp = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            name = tok.substr(0, caret);
            try {
                exp = std::stol(tok.substr(caret + 1));
            } catch (const std::exception&) {
                throw DomainError("bad exponent in token: " + tok);
            }
        }
        int gi = p.generator_index(name);
        if (gi < 0)
            throw DomainError("unknown generator: " + name);
        Letter l = static_cast<Letter>(exp >= 0 ? gi + 1 : -(gi + 1));
        for (long i = 0; i < (exp >= 0 ? exp : -exp); ++i)
            out.push_back(l);
    }
    return out;
}

Word parse_word(const Presentation& p, const std::string& text) {
    return Word::reduce(parse_letters(p, text));
}

std::string format_word(const Presentation& p, const Word& w) {
    if (w.empty())
        return "1";
    std::string out;
    for (int i = 0; i < w.size(); ++i) {
        if (i)
            out += ' ';
        Letter l = w.at(i);
        out += p.generators[static_cast<std::size_t>(generator_of(l))];
        if (l < 0)
            out += "^-1";
    }
    return out;
}

namespace {

struct DehnRule {
    std::vector<Letter> lhs;
    std::vector<Letter> rhs;   // strictly shorter
};

std::vector<Letter> cyclic_rotation(const std::vector<Letter>& w, std::size_t k) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out.push_back(w[(i + k) % w.size()]);
    return out;
}

// All replacements p -> s^-1 with rho = p s a cyclic rotation of a relator or
// its inverse and |p| > |rho| / 2.
std::vector<DehnRule> build_rules(const Presentation& p) {
    std::vector<DehnRule> rules;
    for (const Word& rel : p.relators) {
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<Letter> base = dir ? rel.inverse().letters() : rel.letters();
            for (std::size_t k = 0; k < base.size(); ++k) {
                std::vector<Letter> rho = cyclic_rotation(base, k);
                for (std::size_t cut = rho.size() / 2 + 1; cut <= rho.size(); ++cut) {
                    // rho = p s and rho == 1, so p == s^-1 (strictly shorter).
                    DehnRule rule;
                    rule.lhs.assign(rho.begin(), rho.begin() + static_cast<long>(cut));
                    for (std::size_t i = rho.size(); i > cut; --i)
                        rule.rhs.push_back(static_cast<Letter>(-rho[i - 1]));
                    rules.push_back(std::move(rule));
                }
            }
        }
    }
    std::sort(rules.begin(), rules.end(), [](const DehnRule& a, const DehnRule& b) {
        if (a.lhs.size() != b.lhs.size())
            return a.lhs.size() > b.lhs.size();
        if (a.lhs != b.lhs)
            return a.lhs < b.lhs;
        return a.rhs < b.rhs;
    });
    rules.erase(std::unique(rules.begin(), rules.end(), [](const DehnRule& a, const DehnRule& b) {
                    return a.lhs == b.lhs && a.rhs == b.rhs;
                }),
                rules.end());
    return rules;
}

} // namespace

Word dehn_reduce(const Presentation& p, const Word& w) {
    if (p.relators.empty())
        return w;
    static thread_local const Presentation* cachedPres = nullptr;
    static thread_local std::vector<DehnRule> cachedRules;
    if (cachedPres != &p) {
        cachedRules = build_rules(p);
        cachedPres = &p;
    }
    std::vector<Letter> cur = w.letters();
    bool changed = true;
    while (changed) {
        changed = false;
        for (const DehnRule& rule : cachedRules) {
            if (rule.lhs.size() > cur.size())
                continue;
            for (std::size_t pos = 0; pos + rule.lhs.size() <= cur.size(); ++pos) {
                if (std::equal(rule.lhs.begin(), rule.lhs.end(), cur.begin() + static_cast<long>(pos))) {
                    std::vector<Letter> next(cur.begin(), cur.begin() + static_cast<long>(pos));
                    next.insert(next.end(), rule.rhs.begin(), rule.rhs.end());
                    next.insert(next.end(), cur.begin() + static_cast<long>(pos + rule.lhs.size()), cur.end());
                    cur = Word::reduce(next).letters();
                    changed = true;
                    break;
                }
            }
            if (changed)
                break;
        }
    }
    return Word(std::move(cur));
}

Word reduce_word(const Presentation& p, const std::vector<Letter>& raw) {
    for (Letter l : raw)
        if (l == 0 || generator_of(l) >= p.rank())
            throw DomainError("letter indexes an unknown generator");
    Word w = Word::reduce(raw);
    if (p.kind == PresentationKind::Dehn)
        w = dehn_reduce(p, w);
    return w;
}

bool dehn_trivial(const Presentation& p, const Word& w) {
    if (p.kind == PresentationKind::Free)
        return w.empty();
    return dehn_reduce(p, w).empty();
}

} // namespace coarsekit
