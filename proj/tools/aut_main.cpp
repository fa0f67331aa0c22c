#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "aut/aut.hpp"

using json = nlohmann::ordered_json;
using namespace aut;

namespace {

struct GlobalOpts {
    std::string dot_path;
    bool json_out = false;
    int max_len = 8;
    std::uint64_t seed = 1;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::parse, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

DfaFile load_dfa(const std::string& path) {
    ParsedFile f = parse_automaton_file(read_file(path));
    if (f.kind != FileKind::dfa)
        throw Error(ErrorKind::contract, "'" + path + "' is not a dfa file");
    return *f.dfa;
}

LassoFile load_lasso(const std::string& path) {
    ParsedFile f = parse_automaton_file(read_file(path));
    if (f.kind != FileKind::lasso)
        throw Error(ErrorKind::contract, "'" + path + "' is not a lasso file");
    return *f.lasso;
}

PointedDfa pointed_of(const DfaFile& f) {
    if (!f.initial)
        throw Error(ErrorKind::contract, "automaton has no initial state");
    return PointedDfa{f.dfa, *f.initial};
}

Word parse_word(const Alphabet& alphabet, const std::string& text) {
    if (text.empty() || text == "eps" || text == "ε")
        return Word{};
    bool compact = true;
    for (const auto& s : alphabet.symbols)
        if (s.size() != 1)
            compact = false;
    std::vector<int> letters;
    if (compact && text.find(' ') == std::string::npos) {
        for (char ch : text) {
            int idx = alphabet.index_of(std::string(1, ch));
            if (idx < 0)
                throw Error(ErrorKind::contract, std::string("unknown symbol '") + ch + "'");
            letters.push_back(idx);
        }
    } else {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            int idx = alphabet.index_of(tok);
            if (idx < 0)
                throw Error(ErrorKind::contract, "unknown symbol '" + tok + "'");
            letters.push_back(idx);
        }
    }
    return Word{letters};
}

// lasso literal `spoke:loop` over single-character symbols
Lasso parse_lasso_literal(const std::string& text, Alphabet& alphabet_out) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorKind::contract, "lasso literal must look like 'spoke:loop'");
    std::string spoke = text.substr(0, colon);
    std::string loop = text.substr(colon + 1);
    if (loop.empty())
        throw Error(ErrorKind::contract, "lasso loop must be nonempty");
    std::vector<std::string> syms;
    for (char ch : spoke + loop) {
        std::string s(1, ch);
        bool seen = false;
        for (const auto& t : syms)
            seen = seen || t == s;
        if (!seen)
            syms.push_back(s);
    }
    std::sort(syms.begin(), syms.end());
    for (const auto& s : alphabet_out.symbols) {
        bool seen = false;
        for (const auto& t : syms)
            seen = seen || t == s;
        if (!seen)
            syms.push_back(s);
    }
    std::sort(syms.begin(), syms.end());
    alphabet_out = Alphabet(syms);
    auto to_word = [&](const std::string& s) {
        std::vector<int> ls;
        for (char ch : s)
            ls.push_back(alphabet_out.index_of(std::string(1, ch)));
        return Word{ls};
    };
    return Lasso(to_word(spoke), to_word(loop));
}

json congruence_json(const CongruenceRep& c) {
    std::vector<std::string> names = class_names(c);
    json j;
    j["classes"] = names;
    std::vector<std::string> reps;
    for (const Word& w : c.representative)
        reps.push_back(render_word(c.alphabet, w));
    j["representatives"] = reps;
    j["epsilon"] = names[static_cast<std::size_t>(c.eps_class)];
    json right = json::array();
    for (int q = 0; q < c.class_count; ++q) {
        json row = json::array();
        for (int a = 0; a < c.alphabet.size(); ++a)
            row.push_back(names[static_cast<std::size_t>(c.right(q, a))]);
        right.push_back(row);
    }
    j["right_step"] = right;
    json left = json::array();
    for (int a = 0; a < c.alphabet.size(); ++a) {
        json row = json::array();
        for (int q = 0; q < c.class_count; ++q)
            row.push_back(names[static_cast<std::size_t>(c.left(a, q))]);
        left.push_back(row);
    }
    j["left_step"] = left;
    if (c.accepted_classes) {
        json acc = json::array();
        for (int q : *c.accepted_classes)
            acc.push_back(names[static_cast<std::size_t>(q)]);
        j["accepted_classes"] = acc;
    }
    return j;
}

json lasso_congruence_json(const LassoCongruenceRep& c) {
    json j;
    j["word_part"] = congruence_json(c.word_part);
    std::vector<std::string> names;
    for (const Lasso& l : c.lasso_representative)
        names.push_back(lasso_name(c.word_part.alphabet, l));
    j["lasso_classes"] = names;
    json s2 = json::array();
    for (int q = 0; q < c.word_part.class_count; ++q) {
        json row = json::array();
        for (int a = 0; a < c.word_part.alphabet.size(); ++a)
            row.push_back(names[static_cast<std::size_t>(c.s2(q, a))]);
        s2.push_back(row);
    }
    j["sigma2"] = s2;
    json s3 = json::array();
    for (int p = 0; p < c.lasso_class_count; ++p) {
        json row = json::array();
        for (int a = 0; a < c.word_part.alphabet.size(); ++a)
            row.push_back(names[static_cast<std::size_t>(c.s3(p, a))]);
        s3.push_back(row);
    }
    j["sigma3"] = s3;
    json lx = json::array();
    for (int a = 0; a < c.word_part.alphabet.size(); ++a) {
        json row = json::array();
        for (int p = 0; p < c.lasso_class_count; ++p)
            row.push_back(names[static_cast<std::size_t>(c.lext(a, p))]);
        lx.push_back(row);
    }
    j["left_ext"] = lx;
    if (c.accepted_lasso_classes) {
        json acc = json::array();
        for (int p : *c.accepted_lasso_classes)
            acc.push_back(names[static_cast<std::size_t>(p)]);
        j["accepted_lasso_classes"] = acc;
    }
    return j;
}

json dfa_json(const Dfa& dfa, const std::vector<std::string>& names,
              const std::optional<int>& initial, const std::optional<std::vector<int>>& accepting) {
    json j;
    j["type"] = "dfa";
    j["alphabet"] = dfa.alphabet.symbols;
    j["states"] = names;
    if (initial)
        j["initial"] = names[static_cast<std::size_t>(*initial)];
    if (accepting) {
        json acc = json::array();
        for (int s : *accepting)
            acc.push_back(names[static_cast<std::size_t>(s)]);
        j["accepting"] = acc;
    }
    json trans = json::array();
    for (int s = 0; s < dfa.state_count; ++s)
        for (int a = 0; a < dfa.alphabet.size(); ++a)
            trans.push_back({names[static_cast<std::size_t>(s)],
                             dfa.alphabet.symbols[static_cast<std::size_t>(a)],
                             names[static_cast<std::size_t>(dfa.step(s, a))]});
    j["trans"] = trans;
    return j;
}

json lasso_json(const LassoAutomaton& la, const std::vector<std::string>& n1,
                const std::vector<std::string>& n2) {
    json j;
    j["type"] = "lasso";
    j["alphabet"] = la.alphabet.symbols;
    j["states1"] = n1;
    j["states2"] = n2;
    if (la.initial)
        j["initial"] = n1[static_cast<std::size_t>(*la.initial)];
    if (la.accepting) {
        json acc = json::array();
        for (int y : *la.accepting)
            acc.push_back(n2[static_cast<std::size_t>(y)]);
        j["accepting"] = acc;
    }
    auto rows = [&](int count, const std::vector<std::string>& src,
                    const std::vector<std::string>& dst, auto step) {
        json trans = json::array();
        for (int s = 0; s < count; ++s)
            for (int a = 0; a < la.alphabet.size(); ++a)
                trans.push_back({src[static_cast<std::size_t>(s)],
                                 la.alphabet.symbols[static_cast<std::size_t>(a)],
                                 dst[static_cast<std::size_t>(step(s, a))]});
        return trans;
    };
    j["trans1"] = rows(la.x1_count, n1, n1, [&](int s, int a) { return la.d1(s, a); });
    j["trans2"] = rows(la.x1_count, n1, n2, [&](int s, int a) { return la.d2(s, a); });
    j["trans3"] = rows(la.x2_count, n2, n2, [&](int s, int a) { return la.d3(s, a); });
    return j;
}

void emit(const GlobalOpts& g, const std::string& text_out, const std::string& dot_out,
          const json& json_out = json()) {
    if (g.json_out && !json_out.is_null())
        std::cout << json_out.dump(2) << "\n";
    else
        std::cout << text_out;
    if (!g.dot_path.empty())
        write_file(g.dot_path, dot_out);
}

int run_laws(const GlobalOpts& g, const std::vector<std::string>& files, int random_count) {
    BoundConfig cfg;
    cfg.max_word_len = g.max_len;
    json report = json::array();
    bool all_pass = true;
    auto add = [&](const std::string& input, const std::vector<CheckResult>& results) {
        for (const CheckResult& r : results) {
            json item;
            item["input"] = input;
            item["check"] = r.check;
            item["status"] = r.pass ? "pass" : "fail";
            if (!r.pass) {
                item["witness"] = r.witness;
                all_pass = false;
            }
            report.push_back(item);
        }
    };
    std::vector<LassoAutomaton> lasso_inputs;
    for (const std::string& path : files) {
        ParsedFile f = parse_automaton_file(read_file(path));
        if (f.kind == FileKind::dfa) {
            add(path, dfa_law_suite(f.dfa->as_accepting(), cfg));
        } else if (f.kind == FileKind::lasso) {
            add(path, lasso_law_suite(f.lasso->automaton, cfg));
            if (f.lasso->automaton.initial)
                lasso_inputs.push_back(f.lasso->automaton);
        } else {
            CongruenceRep c = verify_congruence(f.congruence->raw);
            std::vector<CheckResult> results;
            results.push_back(check_left_right_commute(c));
            results.push_back(make_check("unit-law", same_congruence_tables(c, transition_monoid(machine(c)))));
            add(path, results);
        }
    }
    if (lasso_inputs.size() >= 2) {
        bool same_alphabet = true;
        for (const auto& la : lasso_inputs)
            same_alphabet = same_alphabet && la.alphabet == lasso_inputs.front().alphabet;
        if (same_alphabet) {
            add("meet-of-inputs", {check_meet_refinement(lasso_inputs.front().alphabet, lasso_inputs),
                                   check_meet_preservation(lasso_inputs.front().alphabet, lasso_inputs)});
        }
    }
    if (random_count > 0) {
        Rng rng(g.seed);
        for (int i = 0; i < random_count; ++i)
            add("random-dfa-" + std::to_string(i), dfa_law_suite(random_accepting_reachable(rng, 5, 2), cfg));
        for (int i = 0; i < random_count; ++i)
            add("random-lasso-" + std::to_string(i), lasso_law_suite(random_lasso_reachable(rng, 3, 2), cfg));
    }
    add("builtin", {check_gamma_exact(2, 3)});
    std::cout << report.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"automata algebra toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may trail the subcommand arguments
    GlobalOpts g;
    app.add_option("--dot", g.dot_path, "write Graphviz DOT output to this path");
    app.add_flag("--json", g.json_out, "machine-readable JSON output");
    app.add_option("--max-len", g.max_len, "bound for bounded language checks");
    app.add_option("--seed", g.seed, "seed for randomized law runs");

    std::string file, file2, class_rep, colorings = "all";
    std::vector<std::string> files;
    int max_classes = k_default_class_bound;
    int random_count = 0;

    CLI::App* c_reach = app.add_subcommand("reach", "reachable part of a pointed automaton");
    c_reach->add_option("file", file)->required();
    CLI::App* c_tmon = app.add_subcommand("tmonoid", "transition monoid as a class table");
    c_tmon->add_option("file", file)->required();
    CLI::App* c_machine = app.add_subcommand("machine", "right-Cayley machine of a congruence file");
    c_machine->add_option("file", file)->required();
    CLI::App* c_nuc = app.add_subcommand("nuc", "kernel machine of the reachable part");
    c_nuc->add_option("file", file)->required();
    CLI::App* c_free = app.add_subcommand("free", "kernel machine over the full state set");
    c_free->add_option("file", file)->required();
    CLI::App* c_cofree = app.add_subcommand("cofree", "behavior automaton of coloring languages");
    c_cofree->add_option("file", file)->required();
    c_cofree->add_option("--colorings", colorings, "all|singleton")->check(CLI::IsMember({"all", "singleton"}));
    CLI::App* c_mupl = app.add_subcommand("mupl", "subset automaton over the lifted kernel");
    c_mupl->add_option("file", file)->required();
    c_mupl->add_option("--max-classes", max_classes, "class-count guard");
    CLI::App* c_atoms = app.add_subcommand("atoms", "atom decomposition of a kernel class");
    c_atoms->add_option("file", file)->required();
    c_atoms->add_option("--class", class_rep, "class representative word")->required();

    CLI::App* c_lasso = app.add_subcommand("lasso", "two-sorted constructions");
    c_lasso->require_subcommand(1);
    CLI::App* cl_tmon = c_lasso->add_subcommand("tmonoid", "transition congruence tables");
    cl_tmon->add_option("file", file)->required();
    CLI::App* cl_machine = c_lasso->add_subcommand("machine", "machine of the transition congruence");
    cl_machine->add_option("file", file)->required();
    CLI::App* cl_nuc = c_lasso->add_subcommand("nuc", "kernel machine with lifted acceptance");
    cl_nuc->add_option("file", file)->required();
    CLI::App* cl_mupl = c_lasso->add_subcommand("mupl", "subset automaton over the lifted kernel");
    cl_mupl->add_option("file", file)->required();
    cl_mupl->add_option("--max-classes", max_classes, "class-count guard");
    CLI::App* cl_min = c_lasso->add_subcommand("minimal", "observable quotient");
    cl_min->add_option("file", file)->required();
    CLI::App* cl_syn = c_lasso->add_subcommand("syntactic", "syntactic congruence tables");
    cl_syn->add_option("file", file)->required();
    CLI::App* cl_ner = c_lasso->add_subcommand("nerode", "state equivalences with representatives");
    cl_ner->add_option("file", file)->required();

    CLI::App* c_omega = app.add_subcommand("omega", "saturation and Wilke constructions");
    c_omega->require_subcommand(1);
    CLI::App* co_gamma = c_omega->add_subcommand("gamma", "do two lassos denote the same word");
    co_gamma->add_option("lasso1", file)->required();
    co_gamma->add_option("lasso2", file2)->required();
    CLI::App* co_adm = c_omega->add_subcommand("adm", "admissible accepting sets");
    co_adm->add_option("file", file)->required();
    CLI::App* co_sat = c_omega->add_subcommand("saturated", "does acceptance respect rotation");
    co_sat->add_option("file", file)->required();
    CLI::App* co_wilke = c_omega->add_subcommand("wilke", "transition Wilke congruence");
    co_wilke->add_option("file", file)->required();
    CLI::App* co_meet = c_omega->add_subcommand("meet", "reachable product of lasso automata");
    co_meet->add_option("files", files)->required();

    CLI::App* c_laws = app.add_subcommand("laws", "run the invariant suite");
    c_laws->add_option("files", files);
    c_laws->add_option("--random", random_count, "extra randomized instances");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_reach) {
            DfaFile f = load_dfa(file);
            ReachableResult r = reachable_part(pointed_of(f));
            std::vector<std::string> names;
            for (int s : r.new_to_old)
                names.push_back(f.state_names[static_cast<std::size_t>(s)]);
            std::optional<std::vector<int>> acc;
            if (f.accepting) {
                std::vector<int> mapped;
                for (int s = 0; s < r.automaton.dfa.state_count; ++s)
                    if (std::binary_search(f.accepting->begin(), f.accepting->end(),
                                           r.new_to_old[static_cast<std::size_t>(s)]))
                        mapped.push_back(s);
                acc = mapped;
            }
            emit(g, serialize_dfa(r.automaton.dfa, names, r.automaton.initial, acc),
                 dot_dfa(r.automaton.dfa, names, r.automaton.initial, acc),
                 dfa_json(r.automaton.dfa, names, r.automaton.initial, acc));
        } else if (*c_tmon) {
            DfaFile f = load_dfa(file);
            PointedDfa p = reachable_part(pointed_of(f)).automaton;
            CongruenceRep c;
            if (f.accepting) {
                ReachableResult r = reachable_part(pointed_of(f));
                std::vector<int> acc;
                for (int s = 0; s < r.automaton.dfa.state_count; ++s)
                    if (std::binary_search(f.accepting->begin(), f.accepting->end(),
                                           r.new_to_old[static_cast<std::size_t>(s)]))
                        acc.push_back(s);
                c = t_with_acceptance(AcceptingDfa{p.dfa, acc, p.initial});
            } else {
                c = transition_monoid(p);
            }
            std::cout << congruence_json(c).dump(2) << "\n";
            if (!g.dot_path.empty()) {
                PointedDfa m = machine(c);
                write_file(g.dot_path, dot_dfa(m.dfa, class_names(c), m.initial,
                                               c.accepted_classes));
            }
        } else if (*c_machine) {
            ParsedFile f = parse_automaton_file(read_file(file));
            if (f.kind != FileKind::congruence)
                throw Error(ErrorKind::contract, "'machine' expects a congruence file");
            CongruenceRep c = verify_congruence(f.congruence->raw);
            if (f.congruence->accepting) {
                // map through the canonical renumbering via representatives
                std::vector<int> acc;
                for (int q = 0; q < c.class_count; ++q) {
                    int old_q = f.congruence->raw.eps_class;
                    for (int letter : c.representative[static_cast<std::size_t>(q)].letters)
                        old_q = f.congruence->raw.right_step[static_cast<std::size_t>(old_q) *
                                                                 static_cast<std::size_t>(c.alphabet.size()) +
                                                             static_cast<std::size_t>(letter)];
                    if (std::binary_search(f.congruence->accepting->begin(),
                                           f.congruence->accepting->end(), old_q))
                        acc.push_back(q);
                }
                c.accepted_classes = acc;
            }
            PointedDfa m = machine(c);
            emit(g, serialize_dfa(m.dfa, class_names(c), m.initial, c.accepted_classes),
                 dot_dfa(m.dfa, class_names(c), m.initial, c.accepted_classes),
                 dfa_json(m.dfa, class_names(c), m.initial, c.accepted_classes));
        } else if (*c_nuc) {
            DfaFile f = load_dfa(file);
            NucResult r = nuc(pointed_of(f), f.accepting);
            emit(g, serialize_dfa(r.automaton.dfa, class_names(r.table), r.automaton.initial, r.accepting),
                 dot_dfa(r.automaton.dfa, class_names(r.table), r.automaton.initial, r.accepting),
                 dfa_json(r.automaton.dfa, class_names(r.table), r.automaton.initial, r.accepting));
        } else if (*c_free) {
            DfaFile f = load_dfa(file);
            FreeResult r = free_construction(f.dfa);
            emit(g, serialize_dfa(r.automaton.dfa, class_names(r.table), r.automaton.initial, std::nullopt),
                 dot_dfa(r.automaton.dfa, class_names(r.table), r.automaton.initial, std::nullopt),
                 dfa_json(r.automaton.dfa, class_names(r.table), r.automaton.initial, std::nullopt));
        } else if (*c_cofree) {
            DfaFile f = load_dfa(file);
            CofreeResult r = cofree(f.dfa, colorings == "all" ? CofreeMode::all_colorings
                                                              : CofreeMode::singleton_colorings);
            std::vector<std::string> names;
            for (const auto& [x, mask] : r.state_label)
                names.push_back("L(" + f.state_names[static_cast<std::size_t>(x)] + "," +
                                subset_name(f.state_names, mask) + ")");
            emit(g, serialize_dfa(r.automaton.dfa, names, std::nullopt, r.automaton.accepting),
                 dot_dfa(r.automaton.dfa, names, std::nullopt, r.automaton.accepting),
                 dfa_json(r.automaton.dfa, names, std::nullopt, r.automaton.accepting));
        } else if (*c_mupl) {
            DfaFile f = load_dfa(file);
            if (!f.accepting)
                throw Error(ErrorKind::contract, "mupl: automaton has no accepting set");
            MuplAutomaton m = mupl(f.as_accepting(), max_classes);
            AcceptingDfa big = m.as_accepting_dfa();
            std::vector<std::string> cnames = class_names(m.table);
            std::vector<std::string> names;
            for (std::uint64_t u = 0; u < m.state_total(); ++u)
                names.push_back(subset_name(cnames, u));
            std::optional<int> init;
            if (big.initial)
                init = *big.initial;
            emit(g, serialize_dfa(big.dfa, names, init, big.accepting),
                 dot_dfa(big.dfa, names, init, big.accepting),
                 dfa_json(big.dfa, names, init, big.accepting));
        } else if (*c_atoms) {
            DfaFile f = load_dfa(file);
            if (!f.accepting)
                throw Error(ErrorKind::contract, "atoms: automaton has no accepting set");
            MuplAutomaton m = mupl(f.as_accepting(), max_classes);
            std::string stripped = class_rep;
            if (stripped.size() >= 2 && stripped.front() == '[' && stripped.back() == ']')
                stripped = stripped.substr(1, stripped.size() - 2);
            Word rep = parse_word(f.dfa.alphabet, stripped);
            int cls = -1;
            for (int q = 0; q < m.class_count(); ++q)
                if (m.table.representative[static_cast<std::size_t>(q)] == rep)
                    cls = q;
            if (cls < 0)
                throw Error(ErrorKind::contract, "no class with representative '" + class_rep + "'");
            AtomFormula formula = atom_decomposition(f.as_accepting(), m, cls);
            std::vector<AtomTerm> simple = simplified_terms(formula, f.dfa.state_count);
            AcceptingDfa big = m.as_accepting_dfa();
            bool verified = true;
            for (const Word& w : words_upto(f.dfa.alphabet.size(), g.max_len))
                if (atom_formula_member(f.as_accepting(), formula, w) !=
                    big.is_accepting(big.dfa.run(static_cast<int>(static_cast<std::uint64_t>(1) << cls), w)))
                    verified = false;
            json j;
            j["atom"] = "{" + class_name(f.dfa.alphabet, rep) + "}";
            json terms = json::array();
            for (const AtomTerm& t : simple)
                terms.push_back("L(" + f.state_names[static_cast<std::size_t>(t.state)] + "," +
                                subset_name(f.state_names, t.subset) + ")");
            j["intersection_of"] = terms;
            j["verified_up_to"] = g.max_len;
            j["verified"] = verified;
            std::cout << j.dump(2) << "\n";
            if (!verified)
                return 1;
        } else if (*cl_tmon) {
            LassoFile f = load_lasso(file);
            if (!f.automaton.initial)
                throw Error(ErrorKind::contract, "automaton has no initial state");
            LassoCongruenceRep c = lasso_transition(lasso_reachable_part(f.automaton).automaton);
            std::cout << lasso_congruence_json(c).dump(2) << "\n";
        } else if (*cl_machine || *cl_nuc) {
            LassoFile f = load_lasso(file);
            if (!f.automaton.initial)
                throw Error(ErrorKind::contract, "automaton has no initial state");
            LassoNucResult r = lasso_nuc(f.automaton, *cl_nuc ? f.automaton.accepting : std::nullopt);
            std::vector<std::string> n1 = class_names(r.table.word_part);
            std::vector<std::string> n2;
            for (const Lasso& l : r.table.lasso_representative)
                n2.push_back(lasso_name(f.automaton.alphabet, l));
            emit(g, serialize_lasso(r.automaton, n1, n2), dot_lasso(r.automaton, n1, n2), lasso_json(r.automaton, n1, n2));
        } else if (*cl_mupl) {
            LassoFile f = load_lasso(file);
            if (!f.automaton.accepting)
                throw Error(ErrorKind::contract, "automaton has no accepting set");
            LassoMuplResult m = lasso_mupl(f.automaton, max_classes);
            std::vector<std::string> wnames = class_names(m.table.word_part);
            std::vector<std::string> lnames;
            for (const Lasso& l : m.table.lasso_representative)
                lnames.push_back(lasso_name(f.automaton.alphabet, l));
            std::vector<std::string> n1, n2;
            for (int u = 0; u < m.automaton.x1_count; ++u)
                n1.push_back(subset_name(lnames, static_cast<std::uint64_t>(u)));
            for (int u = 0; u < m.automaton.x2_count; ++u)
                n2.push_back(subset_name(wnames, static_cast<std::uint64_t>(u)));
            emit(g, serialize_lasso(m.automaton, n1, n2), dot_lasso(m.automaton, n1, n2), lasso_json(m.automaton, n1, n2));
        } else if (*cl_min) {
            LassoFile f = load_lasso(file);
            MyhillNerodeResult r = myhill_nerode(f.automaton);
            std::vector<std::string> n1, n2;
            for (const Word& w : r.x1_rep)
                n1.push_back("<" + render_word(f.automaton.alphabet, w) + ">");
            for (const Lasso& l : r.x2_rep)
                n2.push_back("<" + lasso_name(f.automaton.alphabet, l) + ">");
            emit(g, serialize_lasso(r.minimal, n1, n2), dot_lasso(r.minimal, n1, n2), lasso_json(r.minimal, n1, n2));
        } else if (*cl_syn) {
            LassoFile f = load_lasso(file);
            LassoCongruenceRep c = syntactic_congruence(f.automaton);
            std::cout << lasso_congruence_json(c).dump(2) << "\n";
        } else if (*cl_ner) {
            LassoFile f = load_lasso(file);
            MyhillNerodeResult r = myhill_nerode(f.automaton);
            json j;
            json w = json::array();
            for (const Word& u : r.x1_rep)
                w.push_back(render_word(f.automaton.alphabet, u));
            j["word_classes"] = w;
            json l = json::array();
            for (const Lasso& x : r.x2_rep)
                l.push_back(lasso_name(f.automaton.alphabet, x));
            j["lasso_classes"] = l;
            std::cout << j.dump(2) << "\n";
        } else if (*co_gamma) {
            Alphabet alpha({"?"});
            Lasso l1 = parse_lasso_literal(file, alpha);
            Alphabet alpha2 = alpha;
            Lasso l2 = parse_lasso_literal(file2, alpha2);
            // reparse the first literal over the merged alphabet
            Alphabet merged = alpha2;
            l1 = parse_lasso_literal(file, merged);
            l2 = parse_lasso_literal(file2, merged);
            std::cout << (gamma_equivalent(l1, l2) ? "true" : "false") << "\n";
        } else if (*co_adm) {
            LassoFile f = load_lasso(file);
            if (!f.automaton.initial)
                throw Error(ErrorKind::contract, "automaton has no initial state");
            LassoReachResult reach = lasso_reachable_part(f.automaton);
            AdmissibilityPartition adm = saturation_partition(reach.automaton);
            std::vector<std::string> names;
            for (int y : reach.x2_new_to_old)
                names.push_back(f.x2_names[static_cast<std::size_t>(y)]);
            json j;
            json classes = json::array();
            for (const auto& cls : adm.base.classes()) {
                json row = json::array();
                for (int y : cls)
                    row.push_back(names[static_cast<std::size_t>(y)]);
                classes.push_back(row);
            }
            j["saturation_classes"] = classes;
            json sets = json::array();
            for (std::uint64_t mask : admissible_sets(reach.automaton, adm)) {
                json row = json::array();
                for (int y = 0; y < reach.automaton.x2_count; ++y)
                    if ((mask >> y) & 1)
                        row.push_back(names[static_cast<std::size_t>(y)]);
                sets.push_back(row);
            }
            j["admissible_sets"] = sets;
            std::cout << j.dump(2) << "\n";
        } else if (*co_sat) {
            LassoFile f = load_lasso(file);
            if (!f.automaton.initial || !f.automaton.accepting)
                throw Error(ErrorKind::contract, "automaton must be pointed and accepting");
            LassoReachResult reach = lasso_reachable_part(f.automaton);
            AdmissibilityPartition adm = saturation_partition(reach.automaton);
            SaturationResult r = is_saturated(reach.automaton, adm);
            json j;
            j["saturated"] = r.saturated;
            if (r.witness) {
                j["witness"] = {lasso_name(f.automaton.alphabet, r.witness->first),
                                lasso_name(f.automaton.alphabet, r.witness->second)};
            }
            std::cout << j.dump(2) << "\n";
        } else if (*co_wilke) {
            LassoFile f = load_lasso(file);
            if (!f.automaton.initial)
                throw Error(ErrorKind::contract, "automaton has no initial state");
            LassoReachResult reach = lasso_reachable_part(f.automaton);
            WilkeCongruenceRep w = wilke_transition(reach.automaton);
            json j;
            json plus = json::array();
            for (const Word& rep : w.plus_rep)
                plus.push_back(render_word(w.alphabet, rep));
            j["plus_classes"] = plus;
            json mult = json::array();
            for (int i = 0; i < w.plus_count; ++i) {
                json row = json::array();
                for (int k = 0; k < w.plus_count; ++k)
                    row.push_back(render_word(w.alphabet, w.plus_rep[static_cast<std::size_t>(w.mult(i, k))]));
                mult.push_back(row);
            }
            j["product"] = mult;
            json up = json::array();
            for (const Lasso& rep : w.up_rep)
                up.push_back(lasso_name(w.alphabet, rep));
            j["up_classes"] = up;
            json omega = json::array();
            for (int s = 0; s < w.plus_count; ++s)
                omega.push_back(lasso_name(w.alphabet, w.up_rep[static_cast<std::size_t>(w.omega_map[static_cast<std::size_t>(s)])]));
            j["omega_power"] = omega;
            json mixed = json::array();
            for (int s = 0; s < w.plus_count; ++s) {
                json row = json::array();
                for (int l = 0; l < w.up_count; ++l)
                    row.push_back(lasso_name(w.alphabet, w.up_rep[static_cast<std::size_t>(w.mixed(s, l))]));
                mixed.push_back(row);
            }
            j["mixed_product"] = mixed;
            std::cout << j.dump(2) << "\n";
        } else if (*co_meet) {
            std::vector<LassoFile> loaded;
            for (const std::string& path : files)
                loaded.push_back(load_lasso(path));
            if (loaded.empty())
                throw Error(ErrorKind::contract, "meet needs at least one file");
            Alphabet alpha = loaded.front().automaton.alphabet;
            std::vector<LassoAutomaton> las;
            for (const auto& lf : loaded)
                las.push_back(lasso_reachable_part(lf.automaton).automaton);
            MeetResult r = reachable_meet(alpha, las);
            auto tuple_name = [&](const std::vector<int>& t, bool sort1) {
                std::string out = "(";
                for (std::size_t i = 0; i < t.size(); ++i) {
                    if (i)
                        out += ",";
                    LassoReachResult reach = lasso_reachable_part(loaded[i].automaton);
                    int old_idx = sort1 ? reach.x1_new_to_old[static_cast<std::size_t>(t[i])]
                                        : reach.x2_new_to_old[static_cast<std::size_t>(t[i])];
                    out += sort1 ? loaded[i].x1_names[static_cast<std::size_t>(old_idx)]
                                 : loaded[i].x2_names[static_cast<std::size_t>(old_idx)];
                }
                return out + ")";
            };
            std::vector<std::string> n1, n2;
            for (const auto& t : r.x1_tuples)
                n1.push_back(tuple_name(t, true));
            for (const auto& t : r.x2_tuples)
                n2.push_back(tuple_name(t, false));
            emit(g, serialize_lasso(r.automaton, n1, n2), dot_lasso(r.automaton, n1, n2), lasso_json(r.automaton, n1, n2));
        } else if (*c_laws) {
            return run_laws(g, files, random_count);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::parse:
            return 2;
        case ErrorKind::size_guard:
            return 3;
        default:
            return 4;
        }
    }
    return 0;
}
