#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "syscons/if_institution.hpp"
#include "syscons/rng.hpp"

using namespace syscons;
using namespace syscons::ifl;

// ---------------------------------------------------------------------------
// Independent oracle: sets-of-sets semantics, no bitmasks, no sharing with
// the engine.  Used to derive expected values before freezing them.

namespace oracle {

using Row = std::set<std::string>;

bool row_satisfies(const Row& row, const std::set<std::string>& gamma, const std::set<std::string>& delta) {
    for (const auto& g : gamma)
        if (!row.count(g)) return true; // antecedent not matched
    for (const auto& d : delta)
        if (row.count(d)) return true;
    return false;
}

bool satisfies(const std::vector<Row>& rows, const Sequent& s) {
    const std::set<std::string> gamma(s.antecedent.begin(), s.antecedent.end());
    const std::set<std::string> delta(s.succedent.begin(), s.succedent.end());
    for (const auto& row : rows)
        if (!row_satisfies(row, gamma, delta)) return false;
    return true;
}

std::vector<Row> rows_of(const Classification& m) {
    std::vector<Row> rows;
    for (std::size_t x = 0; x < m.instances.size(); ++x) {
        Row row;
        for (std::size_t y = 0; y < m.types.size(); ++y)
            if ((m.rows[x] >> y) & 1u) row.insert(m.types[y]);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace oracle

TEST_CASE("sequent satisfaction matches the oracle on random classifications") {
    Rng rng(11);
    const IfLanguage lang = make_language({"a", "b", "c"});
    for (int t = 0; t < 300; ++t) {
        std::vector<std::string> instances;
        std::vector<std::pair<std::string, std::string>> incidence;
        const int k = rng.range(0, 4);
        for (int i = 0; i < k; ++i) {
            instances.push_back("x" + std::to_string(i));
            for (const auto& ty : lang.types)
                if (rng.chance(1, 2)) incidence.emplace_back(instances.back(), ty);
        }
        const Classification m = make_classification(instances, lang.types, incidence);
        for (const auto& s : sentence_universe(lang))
            CHECK(satisfies(m, s) == oracle::satisfies(oracle::rows_of(m), s));
    }
}

TEST_CASE("sequent satisfaction examples") {
    const IfLanguage lang = make_language({"a", "b"});
    const Classification single = make_classification({"x"}, lang.types, {{"x", "a"}});
    CHECK(satisfies(single, make_sequent({"a"}, {"a"})));
    CHECK_FALSE(satisfies(single, make_sequent({"a"}, {"b"})));

    // rows {}, {b}, {a,b}: only the {a,b} row matches the antecedent and it
    // carries b
    const Classification rows = make_classification(
        {"r0", "r1", "r2"}, lang.types, {{"r1", "b"}, {"r2", "a"}, {"r2", "b"}});
    CHECK(satisfies(rows, make_sequent({"a"}, {"b"})));

    CHECK_THROWS_WITH_AS(satisfies(single, make_sequent({"z"}, {})),
                         doctest::Contains("unknown type 'z'"), Error);
}

TEST_CASE("sequent translation takes direct images") {
    const IfLanguage src = make_language({"a", "b"});
    const IfLanguage dst = make_language({"p", "q"});
    CHECK(translate(identity_morphism(src), make_sequent({"a"}, {"b"})) == make_sequent({"a"}, {"b"}));

    const IfMorphism collapse{src, make_language({"p"}), {{"a", "p"}, {"b", "p"}}};
    CHECK(translate(collapse, make_sequent({"a"}, {"b"})) == make_sequent({"p"}, {"p"}));

    const IfMorphism rename{src, dst, {{"a", "p"}, {"b", "q"}}};
    CHECK(translate(rename, make_sequent({"a", "b"}, {})) == make_sequent({"p", "q"}, {}));
}

TEST_CASE("reduct pulls incidence back along the type map") {
    const IfLanguage src = make_language({"a"});
    const IfLanguage dst = make_language({"p"});
    const IfMorphism m{src, dst, {{"a", "p"}}};
    const Classification target = make_classification({"x"}, dst.types, {{"x", "p"}});

    CHECK(reduct(identity_morphism(dst), target) == target);
    const Classification red = reduct(m, target);
    CHECK(incident(red, "x", "a"));

    // invariance spot check: all 16 sequents over {a,b} against random
    // structures over {p,q}
    const IfLanguage src2 = make_language({"a", "b"});
    const IfLanguage dst2 = make_language({"p", "q"});
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        SymbolMap map;
        for (const auto& ty : src2.types) map[ty] = dst2.types[rng.below(2)];
        const IfMorphism mm{src2, dst2, map};
        const auto structures = enumerate_canonical_structures(dst2);
        const auto& m2 = structures[rng.below(structures.size())];
        const Classification r = reduct(mm, m2);
        for (const auto& s : sentence_universe(src2))
            CHECK(satisfies(r, s) == satisfies(m2, translate(mm, s)));
    }
}

TEST_CASE("sentence universe sizes and cap") {
    CHECK(sentence_universe(make_language({})).size() == 1);
    CHECK(sentence_universe(make_language({})).front() == make_sequent({}, {}));
    CHECK(sentence_universe(make_language({"a"})).size() == 4);
    CHECK(sentence_universe(make_language({"a", "b"})).size() == 16);
    const IfLanguage big = make_language({"a", "b", "c", "d", "e", "f", "g", "h", "i"});
    CHECK_THROWS_WITH_AS(sentence_universe(big), doctest::Contains("cap"), Error);
}

TEST_CASE("canonical structure enumeration") {
    const auto one = enumerate_canonical_structures(make_language({"a"}));
    REQUIRE(one.size() == 4);
    CHECK(one[0].instances.empty());                     // no rows
    CHECK(one[1].rows == std::vector<std::uint64_t>{0}); // row {}
    CHECK(one[2].rows == std::vector<std::uint64_t>{1}); // row {a}
    CHECK(one[3].rows == (std::vector<std::uint64_t>{0, 1}));

    CHECK(enumerate_canonical_structures(make_language({"a", "b"})).size() == 16);
    CHECK_THROWS_WITH_AS(enumerate_canonical_structures(make_language({"a", "b", "c", "d", "e"})),
                         doctest::Contains("cap"), Error);
}

TEST_CASE("row-set abstraction is adequate for sequent satisfaction") {
    Rng rng(3);
    const IfLanguage lang = make_language({"a", "b"});
    for (int t = 0; t < 200; ++t) {
        std::vector<std::string> instances;
        std::vector<std::pair<std::string, std::string>> incidence;
        const int k = rng.range(0, 3);
        std::set<std::uint64_t> row_masks;
        for (int i = 0; i < k; ++i) {
            instances.push_back("x" + std::to_string(i));
            std::uint64_t mask = rng.below(4);
            row_masks.insert(mask);
            for (std::size_t y = 0; y < lang.types.size(); ++y)
                if ((mask >> y) & 1u) incidence.emplace_back(instances.back(), lang.types[y]);
        }
        const Classification m = make_classification(instances, lang.types, incidence);
        // abstraction: one instance per realized row
        std::vector<std::string> abs_instances;
        std::vector<std::pair<std::string, std::string>> abs_incidence;
        for (std::uint64_t mask : row_masks) {
            std::string name = "r" + std::to_string(mask);
            for (std::size_t y = 0; y < lang.types.size(); ++y)
                if ((mask >> y) & 1u) abs_incidence.emplace_back(name, lang.types[y]);
            abs_instances.push_back(std::move(name));
        }
        const Classification abstraction = make_classification(abs_instances, lang.types, abs_incidence);
        for (const auto& s : sentence_universe(lang))
            CHECK(satisfies(m, s) == satisfies(abstraction, s));
    }
}

// ---------------------------------------------------------------------------
// infomorphisms

namespace {

// Valid infomorphism by construction: source = reduct of the target along
// the type map, instance map the identity.
std::pair<Classification, Infomorphism> reduct_infomorphism(const IfMorphism& type_part,
                                                            const Classification& target) {
    Infomorphism f;
    f.type_part = type_part;
    for (const auto& x : target.instances) f.instance_map[x] = x;
    return {reduct(type_part, target), f};
}

} // namespace

TEST_CASE("infomorphism violation reporting") {
    const IfLanguage src = make_language({"a"});
    const IfLanguage dst = make_language({"p"});
    const IfMorphism tp{src, dst, {{"a", "p"}}};
    const Classification target = make_classification({"x", "y"}, dst.types, {{"x", "p"}});
    auto [source, f] = reduct_infomorphism(tp, target);
    CHECK_FALSE(infomorphism_violation(f, source, target).has_value());

    // remap y to the instance whose a-row disagrees with y's p-row
    Infomorphism broken = f;
    broken.instance_map["y"] = "x";
    const auto witness = infomorphism_violation(broken, source, target);
    REQUIRE(witness.has_value());
    CHECK(witness->first == "y");
    CHECK(witness->second == "a");
}

TEST_CASE("infomorphisms are institutional structure morphisms, exhaustively") {
    // all type maps between languages of size <= 2, all row-set targets,
    // sources given by the reduct construction (plus extra instances)
    const std::vector<IfLanguage> sources = {make_language({"a"}), make_language({"a", "b"})};
    const std::vector<IfLanguage> targets = {make_language({"p"}), make_language({"p", "q"})};
    Rng rng(17);
    for (const auto& src : sources)
        for (const auto& dst : targets) {
            std::vector<SymbolMap> maps{{}};
            for (const auto& y : src.types) {
                std::vector<SymbolMap> next;
                for (const auto& partial : maps)
                    for (const auto& img : dst.types) {
                        SymbolMap m = partial;
                        m[y] = img;
                        next.push_back(std::move(m));
                    }
                maps = std::move(next);
            }
            for (const auto& map : maps) {
                const IfMorphism tp{src, dst, map};
                for (const auto& target : enumerate_canonical_structures(dst)) {
                    auto [source, f] = reduct_infomorphism(tp, target);
                    // occasionally add an unmapped extra instance
                    if (rng.chance(1, 3)) {
                        std::vector<std::pair<std::string, std::string>> inc;
                        for (std::size_t x = 0; x < source.instances.size(); ++x)
                            for (std::size_t y = 0; y < source.types.size(); ++y)
                                if ((source.rows[x] >> y) & 1u)
                                    inc.emplace_back(source.instances[x], source.types[y]);
                        auto insts = source.instances;
                        insts.push_back("extra");
                        if (rng.chance(1, 2) && !source.types.empty()) inc.emplace_back("extra", source.types[0]);
                        source = make_classification(insts, source.types, inc);
                    }
                    REQUIRE_FALSE(infomorphism_violation(f, source, target).has_value());
                    // structure morphism condition: every sequent satisfied
                    // by the source is satisfied by the translated sequent
                    for (const auto& s : sentence_universe(src))
                        if (satisfies(source, s)) CHECK(satisfies(target, translate(tp, s)));
                }
            }
        }
}

// ---------------------------------------------------------------------------
// classification colimit

TEST_CASE("discrete colimit: disjoint union of types, product of instances") {
    const Classification m0 = make_classification({"x"}, {"a"}, {{"x", "a"}});
    const Classification m1 = make_classification({"u", "v"}, {"b"}, {{"v", "b"}});
    const auto col = classification_colimit(discrete_shape({"n0", "n1"}), {m0, m1}, {});
    CHECK(col.core_language.types == std::vector<std::string>{"a", "b"});
    REQUIRE(col.core.instances.size() == 2); // 1 x 2 tuples
    CHECK(incident(col.core, "(x,u)", "a"));
    CHECK_FALSE(incident(col.core, "(x,u)", "b"));
    CHECK(incident(col.core, "(x,v)", "a"));
    CHECK(incident(col.core, "(x,v)", "b"));
    // injections are infomorphisms
    CHECK_FALSE(infomorphism_violation(col.injections[0], m0, col.core).has_value());
    CHECK_FALSE(infomorphism_violation(col.injections[1], m1, col.core).has_value());
}

TEST_CASE("single-node colimit is the node up to instance renaming") {
    const Classification m = make_classification({"x", "y"}, {"a", "b"}, {{"x", "a"}, {"y", "b"}});
    const auto col = classification_colimit(discrete_shape({"n"}), {m}, {});
    CHECK(col.core_language.types == m.types);
    REQUIRE(col.core.instances.size() == m.instances.size());
    CHECK(incident(col.core, "(x)", "a"));
    CHECK_FALSE(incident(col.core, "(x)", "b"));
    CHECK(incident(col.core, "(y)", "b"));
    CHECK(col.injections[0].type_part.map == identity_morphism(IfLanguage{m.types}).map);
}

TEST_CASE("span colimit merges the mediated type consistently") {
    // E = {citizen} -> L2 = {personnel}, L3 = {worker}
    const Classification e = make_classification({"cY", "cN"}, {"citizen"}, {{"cY", "citizen"}});
    const Classification l2 = make_classification({"w1", "w2"}, {"personnel"}, {{"w1", "personnel"}});
    const Classification l3 = make_classification({"k1"}, {"worker"}, {{"k1", "worker"}});
    ShapeGraph shape;
    shape.nodes = {"E", "L2", "L3"};
    shape.edges = {{"e2", 0, 1}, {"e3", 0, 2}};
    const Infomorphism f2{IfMorphism{IfLanguage{e.types}, IfLanguage{l2.types}, {{"citizen", "personnel"}}},
                          {{"w1", "cY"}, {"w2", "cN"}}};
    const Infomorphism f3{IfMorphism{IfLanguage{e.types}, IfLanguage{l3.types}, {{"citizen", "worker"}}},
                          {{"k1", "cY"}}};
    const auto col = classification_colimit(shape, {e, l2, l3}, {f2, f3});
    CHECK(col.core_language.types == std::vector<std::string>{"citizen"});
    // the only edge-compatible tuple: w1 and k1 both map to cY
    REQUIRE(col.core.instances == std::vector<std::string>{"(cY,w1,k1)"});
    CHECK(incident(col.core, "(cY,w1,k1)", "citizen"));
    CHECK_FALSE(infomorphism_violation(col.injections[0], e, col.core).has_value());
    CHECK_FALSE(infomorphism_violation(col.injections[1], l2, col.core).has_value());
    CHECK_FALSE(infomorphism_violation(col.injections[2], l3, col.core).has_value());
}

TEST_CASE("colimit rejects edges that fail the infomorphism condition") {
    const Classification e = make_classification({"cY", "cN"}, {"t"}, {{"cY", "t"}});
    const Classification l = make_classification({"x"}, {"p"}, {{"x", "p"}});
    ShapeGraph shape;
    shape.nodes = {"E", "L"};
    shape.edges = {{"bad", 0, 1}};
    const Infomorphism f{IfMorphism{IfLanguage{e.types}, IfLanguage{l.types}, {{"t", "p"}}},
                         {{"x", "cN"}}};
    CHECK_THROWS_WITH_AS(classification_colimit(shape, {e, l}, {f}),
                         doctest::Contains("(instance 'x', type 't')"), Error);
}

TEST_CASE("sequent round trip through text") {
    const IfLanguage lang = make_language({"a", "b", "c"});
    CHECK(parse_sequent("a, b |- c", lang) == make_sequent({"a", "b"}, {"c"}));
    CHECK(parse_sequent("|- a", lang) == make_sequent({}, {"a"}));
    CHECK(parse_sequent("a |-", lang) == make_sequent({"a"}, {}));
    CHECK(parse_sequent("|-", lang) == make_sequent({}, {}));
    CHECK(print_sequent(make_sequent({"a", "b"}, {"c"})) == "a,b |- c");
    CHECK(print_sequent(make_sequent({}, {})) == "|-");
    for (const auto& s : sentence_universe(lang)) CHECK(parse_sequent(print_sequent(s), lang) == s);
    CHECK_THROWS_WITH_AS(parse_sequent("a |- z", lang), doctest::Contains("unknown type 'z'"), Error);
    CHECK_THROWS_WITH_AS(parse_sequent("a, b", lang), doctest::Contains("missing the '|-'"), Error);
}
