#ifndef AUT_IO_HPP
#define AUT_IO_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aut/congruence.hpp"
#include "aut/lasso.hpp"

namespace aut {

enum class FileKind { dfa, congruence, lasso };

struct DfaFile {
    Dfa dfa;
    std::optional<int> initial;
    std::optional<std::vector<int>> accepting;
    std::vector<std::string> state_names;

    AcceptingDfa as_accepting() const {
        return AcceptingDfa{dfa, accepting.value_or(std::vector<int>{}), initial};
    }
};

struct CongruenceFile {
    RawCayley raw;
    std::optional<std::vector<int>> accepting;
    std::vector<std::string> class_names;
};

struct LassoFile {
    LassoAutomaton automaton;
    std::vector<std::string> x1_names, x2_names;
};

struct ParsedFile {
    FileKind kind = FileKind::dfa;
    std::optional<DfaFile> dfa;
    std::optional<CongruenceFile> congruence;
    std::optional<LassoFile> lasso;
};

namespace detail {

struct Line {
    int number;
    std::string key;
    std::string value;
};

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

inline std::vector<Line> tokenize_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::size_t colon = line.find(':');
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        if (trimmed.empty())
            continue;
        if (colon == std::string::npos)
            throw Error(ErrorKind::parse, "line " + std::to_string(number) + ": expected 'key: value'");
        std::string key = line.substr(0, colon);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t\r") + 1);
        out.push_back(Line{number, key, line.substr(colon + 1)});
    }
    return out;
}

inline int name_index(const std::vector<std::string>& names, const std::string& name, int line,
                      const char* what) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return static_cast<int>(i);
    throw Error(ErrorKind::parse,
                "line " + std::to_string(line) + ": undeclared " + what + " '" + name + "'");
}

inline std::vector<std::string> unique_names(const std::vector<std::string>& names, int line,
                                             const char* what) {
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw Error(ErrorKind::parse, "line " + std::to_string(line) + ": duplicate " +
                                                  what + " '" + names[i] + "'");
    return names;
}

// collects `src sym dst` triples into a total table
struct TransBuilder {
    std::vector<int> table;
    std::vector<char> set;
    int asize;

    TransBuilder(int states, int alphabet_size)
        : table(static_cast<std::size_t>(states) * static_cast<std::size_t>(alphabet_size), -1),
          set(static_cast<std::size_t>(states) * static_cast<std::size_t>(alphabet_size), 0),
          asize(alphabet_size) {}

    void add(int src, int sym, int dst, int line) {
        std::size_t idx = static_cast<std::size_t>(src) * static_cast<std::size_t>(asize) +
                          static_cast<std::size_t>(sym);
        if (set[idx])
            throw Error(ErrorKind::parse, "line " + std::to_string(line) + ": duplicate transition");
        set[idx] = 1;
        table[idx] = dst;
    }

    std::vector<int> finish(const std::vector<std::string>& names, const char* what) const {
        for (std::size_t i = 0; i < set.size(); ++i)
            if (!set[i])
                throw Error(ErrorKind::parse, std::string("missing ") + what + " transition for '" +
                                                  names[i / static_cast<std::size_t>(asize)] + "'");
        return table;
    }
};

} // namespace detail

inline ParsedFile parse_automaton_file(const std::string& text) {
    using namespace detail;
    std::vector<Line> lines = tokenize_lines(text);

    auto find_one = [&](const std::string& key) -> const Line* {
        const Line* found = nullptr;
        for (const Line& l : lines)
            if (l.key == key) {
                if (found)
                    throw Error(ErrorKind::parse,
                                "line " + std::to_string(l.number) + ": repeated '" + key + "'");
                found = &l;
            }
        return found;
    };

    const Line* type_line = find_one("type");
    if (!type_line)
        throw Error(ErrorKind::parse, "missing 'type:' line");
    std::vector<std::string> type_toks = split_ws(type_line->value);
    if (type_toks.size() != 1)
        throw Error(ErrorKind::parse, "line " + std::to_string(type_line->number) + ": bad type");
    const std::string& type = type_toks[0];

    const Line* alpha_line = find_one("alphabet");
    if (!alpha_line)
        throw Error(ErrorKind::parse, "missing 'alphabet:' line");
    Alphabet alphabet(unique_names(split_ws(alpha_line->value), alpha_line->number, "symbol"));

    ParsedFile out;
    if (type == "dfa") {
        out.kind = FileKind::dfa;
        const Line* states_line = find_one("states");
        if (!states_line)
            throw Error(ErrorKind::parse, "missing 'states:' line");
        std::vector<std::string> names =
            unique_names(split_ws(states_line->value), states_line->number, "state");
        if (names.empty())
            throw Error(ErrorKind::parse, "line " + std::to_string(states_line->number) + ": no states");
        TransBuilder tb(static_cast<int>(names.size()), alphabet.size());
        DfaFile f;
        for (const Line& l : lines) {
            if (l.key == "trans") {
                std::vector<std::string> toks = split_ws(l.value);
                if (toks.size() != 3)
                    throw Error(ErrorKind::parse,
                                "line " + std::to_string(l.number) + ": expected 'src sym dst'");
                int src = name_index(names, toks[0], l.number, "state");
                int sym = alphabet.index_of(toks[1]);
                if (sym < 0)
                    throw Error(ErrorKind::parse, "line " + std::to_string(l.number) +
                                                      ": undeclared symbol '" + toks[1] + "'");
                int dst = name_index(names, toks[2], l.number, "state");
                tb.add(src, sym, dst, l.number);
            } else if (l.key == "initial") {
                std::vector<std::string> toks = split_ws(l.value);
                if (toks.size() != 1)
                    throw Error(ErrorKind::parse,
                                "line " + std::to_string(l.number) + ": expected one initial state");
                f.initial = name_index(names, toks[0], l.number, "state");
            } else if (l.key == "accepting") {
                std::vector<int> acc;
                for (const std::string& t : split_ws(l.value))
                    acc.push_back(name_index(names, t, l.number, "state"));
                std::sort(acc.begin(), acc.end());
                acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
                f.accepting = std::move(acc);
            } else if (l.key != "type" && l.key != "alphabet" && l.key != "states") {
                throw Error(ErrorKind::parse,
                            "line " + std::to_string(l.number) + ": unknown key '" + l.key + "'");
            }
        }
        f.dfa = Dfa(alphabet, static_cast<int>(names.size()), tb.finish(names, "dfa"));
        f.state_names = std::move(names);
        out.dfa = std::move(f);
    } else if (type == "congruence") {
        out.kind = FileKind::congruence;
        const Line* classes_line = find_one("classes");
        if (!classes_line)
            throw Error(ErrorKind::parse, "missing 'classes:' line");
        std::vector<std::string> names =
            unique_names(split_ws(classes_line->value), classes_line->number, "class");
        if (names.empty())
            throw Error(ErrorKind::parse, "line " + std::to_string(classes_line->number) + ": no classes");
        TransBuilder tb(static_cast<int>(names.size()), alphabet.size());
        CongruenceFile f;
        std::optional<int> eps;
        for (const Line& l : lines) {
            if (l.key == "trans") {
                std::vector<std::string> toks = split_ws(l.value);
                if (toks.size() != 3)
                    throw Error(ErrorKind::parse,
                                "line " + std::to_string(l.number) + ": expected 'src sym dst'");
                int src = name_index(names, toks[0], l.number, "class");
                int sym = alphabet.index_of(toks[1]);
                if (sym < 0)
                    throw Error(ErrorKind::parse, "line " + std::to_string(l.number) +
                                                      ": undeclared symbol '" + toks[1] + "'");
                tb.add(src, sym, name_index(names, toks[2], l.number, "class"), l.number);
            } else if (l.key == "epsilon") {
                std::vector<std::string> toks = split_ws(l.value);
                if (toks.size() != 1)
                    throw Error(ErrorKind::parse,
                                "line " + std::to_string(l.number) + ": expected one epsilon class");
                eps = name_index(names, toks[0], l.number, "class");
            } else if (l.key == "accepting") {
                std::vector<int> acc;
                for (const std::string& t : split_ws(l.value))
                    acc.push_back(name_index(names, t, l.number, "class"));
                std::sort(acc.begin(), acc.end());
                acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
                f.accepting = std::move(acc);
            } else if (l.key != "type" && l.key != "alphabet" && l.key != "classes") {
                throw Error(ErrorKind::parse,
                            "line " + std::to_string(l.number) + ": unknown key '" + l.key + "'");
            }
        }
        if (!eps)
            throw Error(ErrorKind::parse, "missing 'epsilon:' line");
        f.raw.alphabet = alphabet;
        f.raw.class_count = static_cast<int>(names.size());
        f.raw.eps_class = *eps;
        f.raw.right_step = tb.finish(names, "congruence");
        f.class_names = std::move(names);
        out.congruence = std::move(f);
    } else if (type == "lasso") {
        out.kind = FileKind::lasso;
        const Line* s1_line = find_one("states1");
        const Line* s2_line = find_one("states2");
        if (!s1_line || !s2_line)
            throw Error(ErrorKind::parse, "missing 'states1:'/'states2:' lines");
        std::vector<std::string> names1 = unique_names(split_ws(s1_line->value), s1_line->number, "state");
        std::vector<std::string> names2 = unique_names(split_ws(s2_line->value), s2_line->number, "state");
        if (names1.empty() || names2.empty())
            throw Error(ErrorKind::parse, "lasso automaton needs nonempty sorts");
        TransBuilder t1(static_cast<int>(names1.size()), alphabet.size());
        TransBuilder t2(static_cast<int>(names1.size()), alphabet.size());
        TransBuilder t3(static_cast<int>(names2.size()), alphabet.size());
        std::optional<int> initial;
        std::optional<std::vector<int>> accepting;
        for (const Line& l : lines) {
            if (l.key == "trans1" || l.key == "trans2" || l.key == "trans3") {
                std::vector<std::string> toks = split_ws(l.value);
                if (toks.size() != 3)
                    throw Error(ErrorKind::parse,
                                "line " + std::to_string(l.number) + ": expected 'src sym dst'");
                int sym = alphabet.index_of(toks[1]);
                if (sym < 0)
                    throw Error(ErrorKind::parse, "line " + std::to_string(l.number) +
                                                      ": undeclared symbol '" + toks[1] + "'");
                if (l.key == "trans1")
                    t1.add(name_index(names1, toks[0], l.number, "state"), sym,
                           name_index(names1, toks[2], l.number, "state"), l.number);
                else if (l.key == "trans2")
                    t2.add(name_index(names1, toks[0], l.number, "state"), sym,
                           name_index(names2, toks[2], l.number, "state"), l.number);
                else
                    t3.add(name_index(names2, toks[0], l.number, "state"), sym,
                           name_index(names2, toks[2], l.number, "state"), l.number);
            } else if (l.key == "initial") {
                std::vector<std::string> toks = split_ws(l.value);
                if (toks.size() != 1)
                    throw Error(ErrorKind::parse,
                                "line " + std::to_string(l.number) + ": expected one initial state");
                initial = name_index(names1, toks[0], l.number, "state");
            } else if (l.key == "accepting") {
                std::vector<int> acc;
                for (const std::string& t : split_ws(l.value))
                    acc.push_back(name_index(names2, t, l.number, "state"));
                std::sort(acc.begin(), acc.end());
                acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
                accepting = std::move(acc);
            } else if (l.key != "type" && l.key != "alphabet" && l.key != "states1" &&
                       l.key != "states2") {
                throw Error(ErrorKind::parse,
                            "line " + std::to_string(l.number) + ": unknown key '" + l.key + "'");
            }
        }
        LassoFile f;
        f.automaton = LassoAutomaton(alphabet, static_cast<int>(names1.size()),
                                     static_cast<int>(names2.size()), t1.finish(names1, "delta1"),
                                     t2.finish(names1, "delta2"), t3.finish(names2, "delta3"));
        f.automaton.initial = initial;
        f.automaton.accepting = std::move(accepting);
        f.x1_names = std::move(names1);
        f.x2_names = std::move(names2);
        out.lasso = std::move(f);
    } else {
        throw Error(ErrorKind::parse,
                    "line " + std::to_string(type_line->number) + ": unknown type '" + type + "'");
    }
    return out;
}

// ----------------------------------------------------------- serializers

inline std::string serialize_dfa(const Dfa& dfa, const std::vector<std::string>& names,
                                 const std::optional<int>& initial,
                                 const std::optional<std::vector<int>>& accepting) {
    std::ostringstream out;
    out << "type: dfa\nalphabet:";
    for (const auto& s : dfa.alphabet.symbols)
        out << ' ' << s;
    out << "\nstates:";
    for (const auto& n : names)
        out << ' ' << n;
    out << '\n';
    if (initial)
        out << "initial: " << names[static_cast<std::size_t>(*initial)] << '\n';
    if (accepting) {
        out << "accepting:";
        for (int s : *accepting)
            out << ' ' << names[static_cast<std::size_t>(s)];
        out << '\n';
    }
    for (int s = 0; s < dfa.state_count; ++s)
        for (int a = 0; a < dfa.alphabet.size(); ++a)
            out << "trans: " << names[static_cast<std::size_t>(s)] << ' '
                << dfa.alphabet.symbols[static_cast<std::size_t>(a)] << ' '
                << names[static_cast<std::size_t>(dfa.step(s, a))] << '\n';
    return out.str();
}

inline std::string serialize_congruence(const CongruenceRep& c,
                                        const std::vector<std::string>& names) {
    std::ostringstream out;
    out << "type: congruence\nalphabet:";
    for (const auto& s : c.alphabet.symbols)
        out << ' ' << s;
    out << "\nclasses:";
    for (const auto& n : names)
        out << ' ' << n;
    out << "\nepsilon: " << names[static_cast<std::size_t>(c.eps_class)] << '\n';
    if (c.accepted_classes) {
        out << "accepting:";
        for (int q : *c.accepted_classes)
            out << ' ' << names[static_cast<std::size_t>(q)];
        out << '\n';
    }
    for (int q = 0; q < c.class_count; ++q)
        for (int a = 0; a < c.alphabet.size(); ++a)
            out << "trans: " << names[static_cast<std::size_t>(q)] << ' '
                << c.alphabet.symbols[static_cast<std::size_t>(a)] << ' '
                << names[static_cast<std::size_t>(c.right(q, a))] << '\n';
    return out.str();
}

inline std::string serialize_lasso(const LassoAutomaton& la, const std::vector<std::string>& names1,
                                   const std::vector<std::string>& names2) {
    std::ostringstream out;
    out << "type: lasso\nalphabet:";
    for (const auto& s : la.alphabet.symbols)
        out << ' ' << s;
    out << "\nstates1:";
    for (const auto& n : names1)
        out << ' ' << n;
    out << "\nstates2:";
    for (const auto& n : names2)
        out << ' ' << n;
    out << '\n';
    if (la.initial)
        out << "initial: " << names1[static_cast<std::size_t>(*la.initial)] << '\n';
    if (la.accepting) {
        out << "accepting:";
        for (int y : *la.accepting)
            out << ' ' << names2[static_cast<std::size_t>(y)];
        out << '\n';
    }
    for (int x = 0; x < la.x1_count; ++x)
        for (int a = 0; a < la.alphabet.size(); ++a)
            out << "trans1: " << names1[static_cast<std::size_t>(x)] << ' '
                << la.alphabet.symbols[static_cast<std::size_t>(a)] << ' '
                << names1[static_cast<std::size_t>(la.d1(x, a))] << '\n';
    for (int x = 0; x < la.x1_count; ++x)
        for (int a = 0; a < la.alphabet.size(); ++a)
            out << "trans2: " << names1[static_cast<std::size_t>(x)] << ' '
                << la.alphabet.symbols[static_cast<std::size_t>(a)] << ' '
                << names2[static_cast<std::size_t>(la.d2(x, a))] << '\n';
    for (int y = 0; y < la.x2_count; ++y)
        for (int a = 0; a < la.alphabet.size(); ++a)
            out << "trans3: " << names2[static_cast<std::size_t>(y)] << ' '
                << la.alphabet.symbols[static_cast<std::size_t>(a)] << ' '
                << names2[static_cast<std::size_t>(la.d3(y, a))] << '\n';
    return out.str();
}

// ------------------------------------------------------------------- DOT

namespace detail {
inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}
} // namespace detail

inline std::string dot_dfa(const Dfa& dfa, const std::vector<std::string>& names,
                           const std::optional<int>& initial,
                           const std::optional<std::vector<int>>& accepting) {
    std::ostringstream out;
    out << "digraph automaton {\n  rankdir=LR;\n";
    if (initial)
        out << "  __start [shape=point];\n";
    for (int s = 0; s < dfa.state_count; ++s) {
        bool acc = accepting && std::binary_search(accepting->begin(), accepting->end(), s);
        out << "  " << detail::dot_quote(names[static_cast<std::size_t>(s)]) << " [shape="
            << (acc ? "doublecircle" : "circle") << "];\n";
    }
    if (initial)
        out << "  __start -> " << detail::dot_quote(names[static_cast<std::size_t>(*initial)]) << ";\n";
    for (int s = 0; s < dfa.state_count; ++s)
        for (int t = 0; t < dfa.state_count; ++t) {
            std::string label;
            for (int a = 0; a < dfa.alphabet.size(); ++a)
                if (dfa.step(s, a) == t) {
                    if (!label.empty())
                        label += ",";
                    label += dfa.alphabet.symbols[static_cast<std::size_t>(a)];
                }
            if (!label.empty())
                out << "  " << detail::dot_quote(names[static_cast<std::size_t>(s)]) << " -> "
                    << detail::dot_quote(names[static_cast<std::size_t>(t)]) << " [label="
                    << detail::dot_quote(label) << "];\n";
        }
    out << "}\n";
    return out.str();
}

inline std::string dot_lasso(const LassoAutomaton& la, const std::vector<std::string>& names1,
                             const std::vector<std::string>& names2) {
    std::ostringstream out;
    out << "digraph lasso_automaton {\n  rankdir=LR;\n";
    if (la.initial)
        out << "  __start [shape=point];\n";
    for (int x = 0; x < la.x1_count; ++x)
        out << "  " << detail::dot_quote("s1_" + names1[static_cast<std::size_t>(x)]) << " [shape=circle,label="
            << detail::dot_quote(names1[static_cast<std::size_t>(x)]) << "];\n";
    for (int y = 0; y < la.x2_count; ++y)
        out << "  " << detail::dot_quote("s2_" + names2[static_cast<std::size_t>(y)]) << " [shape=box,peripheries="
            << (la.is_accepting(y) ? 2 : 1) << ",label=" << detail::dot_quote(names2[static_cast<std::size_t>(y)])
            << "];\n";
    if (la.initial)
        out << "  __start -> " << detail::dot_quote("s1_" + names1[static_cast<std::size_t>(*la.initial)]) << ";\n";
    auto edges = [&](const std::string& src_prefix, const std::vector<std::string>& src_names,
                     const std::string& dst_prefix, const std::vector<std::string>& dst_names,
                     int src_count, auto step, const char* style) {
        for (int s = 0; s < src_count; ++s)
            for (std::size_t t = 0; t < dst_names.size(); ++t) {
                std::string label;
                for (int a = 0; a < la.alphabet.size(); ++a)
                    if (step(s, a) == static_cast<int>(t)) {
                        if (!label.empty())
                            label += ",";
                        label += la.alphabet.symbols[static_cast<std::size_t>(a)];
                    }
                if (!label.empty())
                    out << "  " << detail::dot_quote(src_prefix + src_names[static_cast<std::size_t>(s)]) << " -> "
                        << detail::dot_quote(dst_prefix + dst_names[t]) << " [label="
                        << detail::dot_quote(label) << style << "];\n";
            }
    };
    edges("s1_", names1, "s1_", names1, la.x1_count, [&](int s, int a) { return la.d1(s, a); }, "");
    edges("s1_", names1, "s2_", names2, la.x1_count, [&](int s, int a) { return la.d2(s, a); },
          ",style=dashed");
    edges("s2_", names2, "s2_", names2, la.x2_count, [&](int s, int a) { return la.d3(s, a); }, "");
    out << "}\n";
    return out.str();
}

// --------------------------------------------------------- display names

inline std::string class_name(const Alphabet& alphabet, const Word& rep) {
    return "[" + render_word(alphabet, rep) + "]";
}

inline std::vector<std::string> class_names(const CongruenceRep& c) {
    std::vector<std::string> out;
    for (const Word& w : c.representative)
        out.push_back(class_name(c.alphabet, w));
    return out;
}

inline std::string lasso_name(const Alphabet& alphabet, const Lasso& l) {
    return "(" + render_word(alphabet, l.spoke) + "," + render_word(alphabet, l.loop) + ")";
}

inline std::string subset_name(const std::vector<std::string>& element_names, std::uint64_t mask) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < element_names.size(); ++i)
        if ((mask >> i) & 1) {
            if (!first)
                out += ",";
            out += element_names[i];
            first = false;
        }
    out += "}";
    return out;
}

} // namespace aut

#endif
