#include "doctest.h"

#include "fixtures.hpp"

using namespace aut;

namespace {

const char* toggle_text = R"(# two-state automaton
type: dfa
alphabet: a b
states: x y
initial: x
accepting: x
trans: x a y
trans: x b x
trans: y a y
trans: y b x
)";

const char* loop_head_text = R"(type: lasso
alphabet: a b
states1: p
states2: r s
initial: p
accepting: r
trans1: p a p
trans1: p b p
trans2: p a r
trans2: p b s
trans3: r a r
trans3: r b r
trans3: s a s
trans3: s b s
)";

} // namespace

TEST_CASE("parse dfa files") {
    ParsedFile f = parse_automaton_file(toggle_text);
    REQUIRE(f.kind == FileKind::dfa);
    const DfaFile& d = *f.dfa;
    CHECK(d.state_names == std::vector<std::string>{"x", "y"});
    CHECK(d.dfa.delta == fixtures::toggle_dfa().delta);
    CHECK(d.initial == 0);
    CHECK(d.accepting == std::vector<int>{0});
}

TEST_CASE("parse lasso files") {
    ParsedFile f = parse_automaton_file(loop_head_text);
    REQUIRE(f.kind == FileKind::lasso);
    const LassoFile& l = *f.lasso;
    CHECK(l.automaton.delta1 == fixtures::loop_head_lasso().delta1);
    CHECK(l.automaton.delta2 == fixtures::loop_head_lasso().delta2);
    CHECK(l.automaton.delta3 == fixtures::loop_head_lasso().delta3);
    CHECK(l.automaton.initial == 0);
}

TEST_CASE("parse congruence files and verify them") {
    const char* text = R"(type: congruence
alphabet: a b
classes: e A B
epsilon: e
accepting: e B
trans: e a A
trans: e b B
trans: A a A
trans: A b B
trans: B a A
trans: B b B
)";
    ParsedFile f = parse_automaton_file(text);
    REQUIRE(f.kind == FileKind::congruence);
    CongruenceRep c = verify_congruence(f.congruence->raw);
    CHECK(c.class_count == 3);
    CHECK(same_congruence_tables(c, transition_monoid(fixtures::toggle_at_x())));
}

TEST_CASE("parse errors carry line numbers") {
    auto parse_fails = [](const char* text, const char* needle) {
        try {
            parse_automaton_file(text);
            return false;
        } catch (const Error& e) {
            return e.kind() == ErrorKind::parse &&
                   std::string(e.what()).find(needle) != std::string::npos;
        }
    };
    CHECK(parse_fails("type: dfa\nalphabet: a\nstates: x\ntrans: x a q\n", "line 4"));
    CHECK(parse_fails("type: dfa\nalphabet: a\nstates: x\ntrans: x q x\n", "symbol"));
    CHECK(parse_fails("type: dfa\nalphabet: a\nstates: x\n", "missing"));
    CHECK(parse_fails("type: dfa\nalphabet: a a\nstates: x\ntrans: x a x\n", "duplicate"));
    CHECK(parse_fails("type: widget\nalphabet: a\n", "unknown type"));
}

TEST_CASE("serialization round trip") {
    SUBCASE("dfa") {
        ParsedFile f = parse_automaton_file(toggle_text);
        std::string once = serialize_dfa(f.dfa->dfa, f.dfa->state_names, f.dfa->initial, f.dfa->accepting);
        ParsedFile g = parse_automaton_file(once);
        std::string twice = serialize_dfa(g.dfa->dfa, g.dfa->state_names, g.dfa->initial, g.dfa->accepting);
        CHECK(once == twice);
        CHECK(g.dfa->dfa.delta == f.dfa->dfa.delta);
    }
    SUBCASE("lasso") {
        ParsedFile f = parse_automaton_file(loop_head_text);
        std::string once = serialize_lasso(f.lasso->automaton, f.lasso->x1_names, f.lasso->x2_names);
        ParsedFile g = parse_automaton_file(once);
        std::string twice = serialize_lasso(g.lasso->automaton, g.lasso->x1_names, g.lasso->x2_names);
        CHECK(once == twice);
    }
    SUBCASE("congruence") {
        CongruenceRep c = transition_monoid(fixtures::toggle_at_x());
        c.accepted_classes = std::vector<int>{0, 2};
        std::string once = serialize_congruence(c, class_names(c));
        ParsedFile f = parse_automaton_file(once);
        REQUIRE(f.kind == FileKind::congruence);
        CongruenceRep back = verify_congruence(f.congruence->raw);
        CHECK(back.right_step == c.right_step);
        // accepted classes are carried by the file, not by verify_congruence
        back.accepted_classes = f.congruence->accepting;
        CHECK(serialize_congruence(back, class_names(back)) == once);
    }
    SUBCASE("line order does not matter") {
        std::string shuffled = "trans: x a y\ninitial: x\ntype: dfa\ntrans: y b x\n"
                               "states: x y\ntrans: y a y\nalphabet: a b\ntrans: x b x\naccepting: x\n";
        ParsedFile f = parse_automaton_file(shuffled);
        CHECK(f.dfa->dfa.delta == fixtures::toggle_dfa().delta);
    }
}

TEST_CASE("dot output is stable and marks structure") {
    ParsedFile f = parse_automaton_file(toggle_text);
    std::string dot = dot_dfa(f.dfa->dfa, f.dfa->state_names, f.dfa->initial, f.dfa->accepting);
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("\"x\" -> \"y\" [label=\"a\"]") != std::string::npos);
    CHECK(dot == dot_dfa(f.dfa->dfa, f.dfa->state_names, f.dfa->initial, f.dfa->accepting));

    ParsedFile g = parse_automaton_file(loop_head_text);
    std::string ldot = dot_lasso(g.lasso->automaton, g.lasso->x1_names, g.lasso->x2_names);
    CHECK(ldot.find("peripheries=2") != std::string::npos);
    CHECK(ldot.find("shape=box") != std::string::npos);
}

TEST_CASE("display names") {
    CongruenceRep c = transition_monoid(fixtures::toggle_at_x());
    std::vector<std::string> names = class_names(c);
    CHECK(names == std::vector<std::string>{"[ε]", "[a]", "[b]"});
    CHECK(subset_name(names, 0b101) == "{[ε],[b]}");
    CHECK(lasso_name(c.alphabet, Lasso(Word{}, Word{{0, 1}})) == "(ε,ab)");
}
