#ifndef AUT_ALPHABET_HPP
#define AUT_ALPHABET_HPP

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "aut/base.hpp"

namespace aut {

/// Finite ordered set of symbol names. The construction order is the
/// canonical order used by every shortlex enumeration in the library.
struct Alphabet {
    std::vector<std::string> symbols;

    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> syms) : symbols(std::move(syms)) {
        if (symbols.empty())
            throw Error(ErrorKind::contract, "alphabet must be nonempty");
        for (std::size_t i = 0; i < symbols.size(); ++i)
            for (std::size_t j = i + 1; j < symbols.size(); ++j)
                if (symbols[i] == symbols[j])
                    throw Error(ErrorKind::contract, "duplicate symbol '" + symbols[i] + "'");
    }

    int size() const { return static_cast<int>(symbols.size()); }

    int index_of(std::string_view name) const {
        for (std::size_t i = 0; i < symbols.size(); ++i)
            if (symbols[i] == name)
                return static_cast<int>(i);
        return -1;
    }

    bool operator==(const Alphabet&) const = default;
};

/// A finite word as a sequence of symbol indices.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

    int size() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }

    Word appended(int a) const {
        Word w = *this;
        w.letters.push_back(a);
        return w;
    }

    Word concat(const Word& other) const {
        Word w = *this;
        w.letters.insert(w.letters.end(), other.letters.begin(), other.letters.end());
        return w;
    }

    Word reversed() const {
        Word w = *this;
        std::reverse(w.letters.begin(), w.letters.end());
        return w;
    }

    bool operator==(const Word&) const = default;
};

inline bool lex_less(const Word& a, const Word& b) {
    return std::lexicographical_compare(a.letters.begin(), a.letters.end(), b.letters.begin(),
                                        b.letters.end());
}

inline bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    return lex_less(a, b);
}

/// All words of length <= maxlen over an alphabet of `alphabet_size`
/// letters, in shortlex order.
inline std::vector<Word> words_upto(int alphabet_size, int maxlen) {
    std::vector<Word> out;
    out.emplace_back();
    std::size_t level_begin = 0;
    for (int len = 1; len <= maxlen; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (int a = 0; a < alphabet_size; ++a)
                out.push_back(out[i].appended(a));
        level_begin = level_end;
    }
    return out;
}

inline std::string render_word(const Alphabet& alphabet, const Word& w,
                               std::string_view epsilon = "ε") {
    if (w.empty())
        return std::string(epsilon);
    bool compact = true;
    for (const auto& s : alphabet.symbols)
        if (s.size() != 1)
            compact = false;
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (!compact && i > 0)
            out += ' ';
        out += alphabet.symbols[static_cast<std::size_t>(w.letters[i])];
    }
    return out;
}

} // namespace aut

#endif
