// Acceptance suite: one line per criterion, PASS or FAIL with a short
// reason.  Exit code 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "syscons/document.hpp"
#include "syscons/generate.hpp"
#include "syscons/witness_search.hpp"

using namespace syscons;
using IfI = ifl::IfInstitution;
using FolfI = folf::FolfInstitution;
using Clock = std::chrono::steady_clock;

namespace {

const int kBound = 3;

std::string fixture(const std::string& name) { return std::string(SYSCONS_FIXTURE_DIR) + "/" + name; }

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

struct Criterion {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int run_binary(const std::string& args) {
    const std::string cmd = std::string(SYSCONS_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

folf::FolfLanguage lang_r() {
    return folf::FolfLanguage{folf::make_signature({{"R", 2}}), folf::SchemaSet::default_set()};
}

const std::string kRefl = "forall x. R(x,x)";
const std::string kSym = "forall x. forall y. R(x,y) -> R(y,x)";
const std::string kTrans = "forall x. forall y. forall z. R(x,y) & R(y,z) -> R(x,z)";
const std::string kAntisym = "forall x. forall y. R(x,y) & R(y,x) -> x = y";

// --------------------------------------------------------------------------
// 1. span example: fuse + sys-consequence reproduce the closed equivalence
//    theory at every node, antisymmetry refuted at carrier <= 2, < 5 s.

Criterion criterion1() {
    Criterion c;
    const auto start = Clock::now();

    c.expect(run_binary("fuse " + fixture("span.sys")) == 0, "fuse exited nonzero");
    c.expect(run_binary("sys-consequence " + fixture("span.sys")) == 0, "sys-consequence exited nonzero");

    const auto loaded = cli::load_document(fixture("span.sys"));
    const auto& doc = std::get<cli::Document<FolfI>>(loaded.doc);
    const auto lang = lang_r();
    std::vector<folf::FolfSentence> equivalence;
    for (const auto& text : {kRefl, kSym, kTrans})
        equivalence.push_back(FolfI::parse_sentence(text, lang));
    const auto expected = make_specification<FolfI>(lang, equivalence);

    const auto fused = formal_fusion(doc.formal);
    c.expect(fused.sentences == expected.sentences, "fusion theory differs from the equivalence theory");
    c.expect(consequence(fused, kBound).sentences == expected.sentences, "fusion consequence is not closed");

    const auto closed = formal_system_consequence(doc.formal, kBound);
    for (std::size_t i = 0; i < closed.nodes.size(); ++i) {
        c.expect(closed.nodes[i].sentences == expected.sentences,
                 "node " + doc.formal.shape.nodes[i] + " does not carry the equivalence theory");
        for (const auto& text : {kRefl, kSym, kTrans})
            c.expect(entails(closed.nodes[i], FolfI::parse_sentence(text, lang), kBound).holds,
                     "node " + doc.formal.shape.nodes[i] + " fails to entail " + text);
        const auto anti = entails(closed.nodes[i], FolfI::parse_sentence(kAntisym, lang), kBound);
        c.expect(!anti.holds, "antisymmetry is not refuted");
        c.expect(anti.witness.has_value() && anti.witness->carrier <= 2,
                 "antisymmetry counter-model not exhibited at carrier <= 2");
    }

    const long long elapsed = ms_since(start);
    c.expect(elapsed < 5000, "runtime " + std::to_string(elapsed) + " ms exceeds 5 s");
    if (c.ok) c.detail = "all nodes carry the closed equivalence theory (" + std::to_string(elapsed) + " ms)";
    return c;
}

// --------------------------------------------------------------------------
// 2. closure laws: 500 random specifications and 100 random systems, < 60 s.

Criterion criterion2() {
    Criterion c;
    const auto start = Clock::now();
    Rng rng(20260810);

    for (int t = 0; t < 500 && c.ok; ++t) {
        const ifl::IfLanguage lang = ifl::random_language(rng, 3);
        const auto spec = make_specification<IfI>(lang, ifl::random_theory(lang, rng, 3));
        const auto closed = consequence(spec, kBound);
        c.expect(std::includes(closed.sentences.begin(), closed.sentences.end(), spec.sentences.begin(),
                               spec.sentences.end()),
                 "consequence is not increasing");
        c.expect(consequence(closed, kBound).sentences == closed.sentences, "consequence is not idempotent");
        auto larger = spec.sentences;
        const auto extra = ifl::random_sequent(lang, rng);
        if (!std::binary_search(larger.begin(), larger.end(), extra))
            larger.insert(std::lower_bound(larger.begin(), larger.end(), extra), extra);
        const auto closed_larger = consequence(Specification<IfI>{lang, larger}, kBound);
        c.expect(std::includes(closed_larger.sentences.begin(), closed_larger.sentences.end(),
                               closed.sentences.begin(), closed.sentences.end()),
                 "consequence is not monotone");
    }

    ifl::RandomSystemOptions opts;
    for (int t = 0; t < 100 && c.ok; ++t) {
        const auto is = ifl::random_information_system(opts, rng);
        const auto sc = system_consequence(is, kBound);
        c.expect(pointwise_leq(sc, is, kBound), "system consequence is not increasing");
        const auto scc = system_consequence(sc, kBound);
        for (std::size_t i = 0; i < sc.nodes.size(); ++i)
            c.expect(scc.nodes[i].theory == sc.nodes[i].theory, "system consequence is not idempotent");

        InformationSystem<IfI> stronger = is;
        const std::size_t node = rng.below(stronger.nodes.size());
        const auto extra = ifl::random_sequent(stronger.nodes[node].language, rng);
        auto& th = stronger.nodes[node].theory;
        if (!std::binary_search(th.begin(), th.end(), extra))
            th.insert(std::lower_bound(th.begin(), th.end(), extra), extra);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t e = 0; e < stronger.edges.size(); ++e) {
                const auto& edge = stronger.shape.edges[e];
                auto& dst = stronger.nodes[static_cast<std::size_t>(edge.target)].theory;
                for (const auto& s : stronger.nodes[static_cast<std::size_t>(edge.source)].theory) {
                    const auto image = ifl::translate(stronger.edges[e].type_part, s);
                    if (!std::binary_search(dst.begin(), dst.end(), image)) {
                        dst.insert(std::lower_bound(dst.begin(), dst.end(), image), image);
                        changed = true;
                    }
                }
            }
        }
        c.expect(pointwise_leq(system_consequence(stronger, kBound), sc, kBound),
                 "system consequence is not monotone");
    }

    const long long elapsed = ms_since(start);
    c.expect(elapsed < 60000, "runtime " + std::to_string(elapsed) + " ms exceeds 60 s");
    if (c.ok) c.detail = "500 specifications + 100 systems, zero violations (" + std::to_string(elapsed) + " ms)";
    return c;
}

// --------------------------------------------------------------------------
// 3. adjunctions: specification flow and sound logic flow, 500 triples each.

Criterion criterion3() {
    Criterion c;
    Rng rng(31337);

    for (int t = 0; t < 500 && c.ok; ++t) {
        const ifl::IfLanguage src = ifl::random_language(rng, 3);
        const ifl::IfLanguage dst = ifl::random_language(rng, 2);
        const ifl::IfMorphism m{src, dst, ifl::random_type_map(src, dst, rng)};
        const auto t1 = make_specification<IfI>(src, ifl::random_theory(src, rng, 3));
        const auto t2 = make_specification<IfI>(dst, ifl::random_theory(dst, rng, 3));
        c.expect(spec_leq(inv_flow(m, t2, kBound), t1, kBound) == spec_leq(t2, dir_flow(m, t1), kBound),
                 "specification adjunction violated");
    }

    for (int t = 0; t < 500 && c.ok; ++t) {
        const ifl::IfLanguage src_lang = ifl::random_language(rng, 2);
        const ifl::IfLanguage dst_lang = ifl::random_language(rng, 2);
        const ifl::IfMorphism m{src_lang, dst_lang, ifl::random_type_map(src_lang, dst_lang, rng)};
        const ifl::Classification target = ifl::random_classification(dst_lang, rng, 3);
        const IndexedStructure<IfI> dst{dst_lang, target};
        const IndexedStructure<IfI> src{src_lang, ifl::reduct(m, target)};
        const auto sm = make_structure_morphism<IfI>(m, src, dst);

        auto sound_over = [&](const IndexedStructure<IfI>& at) {
            const auto in = intent(at).sentences;
            std::vector<ifl::Sequent> theory;
            for (int i = rng.range(0, 2); i > 0 && !in.empty(); --i) theory.push_back(in[rng.below(in.size())]);
            return make_logic<IfI>(at.language, at.structure, std::move(theory));
        };
        const Logic<IfI> l1 = sound_over(src);
        const Logic<IfI> l2 = sound_over(dst);
        c.expect(logic_leq(inv_sound(sm, l2, kBound), l1, kBound) ==
                     logic_leq(l2, dir_logic(sm, l1), kBound),
                 "sound logic adjunction violated");
    }

    if (c.ok) c.detail = "500 specification triples + 500 sound logic triples, zero violations";
    return c;
}

// --------------------------------------------------------------------------
// 4. preservation: dir soundness, inv completeness, res soundness,
//    inc . res identity; 200 pairs each.

Criterion criterion4() {
    Criterion c;
    Rng rng(424242);

    for (int t = 0; t < 200 && c.ok; ++t) {
        const ifl::IfLanguage src_lang = ifl::random_language(rng, 2);
        const ifl::IfLanguage dst_lang = ifl::random_language(rng, 2);
        const ifl::IfMorphism m{src_lang, dst_lang, ifl::random_type_map(src_lang, dst_lang, rng)};
        const ifl::Classification target = ifl::random_classification(dst_lang, rng, 3);
        const IndexedStructure<IfI> dst{dst_lang, target};
        const IndexedStructure<IfI> src{src_lang, ifl::reduct(m, target)};
        const auto sm = make_structure_morphism<IfI>(m, src, dst);

        // sound source flows forward soundly
        const auto src_intent = intent(src).sentences;
        std::vector<ifl::Sequent> sound_theory;
        for (int i = rng.range(0, 2); i > 0 && !src_intent.empty(); --i)
            sound_theory.push_back(src_intent[rng.below(src_intent.size())]);
        const Logic<IfI> sound_src = make_logic<IfI>(src_lang, src.structure, std::move(sound_theory));
        c.expect(is_sound(dir_logic(sm, sound_src), kBound), "direct flow broke soundness");

        // complete target flows backward completely
        auto complete_theory = intent(dst).sentences;
        const Logic<IfI> complete_dst = make_logic<IfI>(dst_lang, dst.structure, std::move(complete_theory));
        c.expect(is_complete(inv_logic(sm, complete_dst, kBound), kBound), "inverse flow broke completeness");

        // res is always sound; inc . res is the identity on sound logics
        const Logic<IfI> any = make_logic<IfI>(src_lang, src.structure, ifl::random_theory(src_lang, rng, 3));
        const Logic<IfI> res = res_logic(any, kBound);
        c.expect(is_sound(res, kBound), "restriction is not sound");
        c.expect(logic_equivalent(res_logic(res, kBound), res, kBound), "inc . res is not the identity");
        c.expect(logic_equivalent(res_logic(sound_src, kBound), sound_src, kBound),
                 "inc . res moved a sound logic");
    }

    if (c.ok) c.detail = "200 logic/morphism pairs, zero violations";
    return c;
}

// --------------------------------------------------------------------------
// 5. satisfaction invariance, exhaustive at small size.

Criterion criterion5() {
    Criterion c;

    const std::vector<ifl::IfLanguage> sources = {ifl::make_language({"a"}), ifl::make_language({"a", "b"})};
    const std::vector<ifl::IfLanguage> targets = {ifl::make_language({"p"}), ifl::make_language({"p", "q"})};
    long long checked = 0;
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
                const ifl::IfMorphism m{src, dst, map};
                for (const auto& target : ifl::enumerate_canonical_structures(dst)) {
                    const auto red = ifl::reduct(m, target);
                    for (const auto& s : ifl::sentence_universe(src)) {
                        ++checked;
                        c.expect(ifl::satisfies(red, s) == ifl::satisfies(target, ifl::translate(m, s)),
                                 "IF invariance violated");
                    }
                }
            }
        }

    // FOLf: identity, renaming and a merging morphism, all structures n <= 3
    const folf::FolfLanguage r = lang_r();
    const folf::FolfLanguage s{folf::make_signature({{"S", 2}}), folf::SchemaSet::default_set()};
    const folf::FolfLanguage rs{folf::make_signature({{"R", 2}, {"S", 2}}), folf::SchemaSet::default_set()};
    const folf::FolfLanguage u{folf::make_signature({{"U", 2}}), folf::SchemaSet::default_set()};
    std::vector<folf::FolfMorphism> morphisms = {
        identity_morphism(r),
        folf::FolfMorphism{r, s, {{"R", "S"}}},
        folf::FolfMorphism{rs, u, {{"R", "U"}, {"S", "U"}}},
        folf::FolfMorphism{r, rs, {{"R", "S"}}},
    };
    for (const auto& m : morphisms) {
        for (const auto& target : folf::enumerate_structures(m.target.signature, kBound)) {
            const auto red = FolfI::reduct(m, target);
            for (const auto& sen : folf::sentence_universe(m.source.signature, m.source.schemas)) {
                ++checked;
                c.expect(folf::evaluate(red, sen) == folf::evaluate(target, FolfI::translate(m, sen)),
                         "FOLf invariance violated");
            }
        }
    }

    if (c.ok) c.detail = std::to_string(checked) + " biconditionals, zero violations";
    return c;
}

// --------------------------------------------------------------------------
// 6. channels: minimal covers cover, mediators exist uniquely against the
//    enumerated alternatives on the span and discrete fixtures.

Criterion criterion6() {
    Criterion c;

    // minimal covers of every shipped fixture
    for (const auto& name : {"discrete.sys", "constant.sys", "community.sys"}) {
        const auto loaded = cli::load_document(fixture(name));
        const auto& doc = std::get<cli::Document<IfI>>(loaded.doc);
        const auto ds = underlying(doc.system);
        c.expect(is_covering(minimal_cover(ds), ds), std::string(name) + ": minimal cover does not cover");
    }
    {
        const auto loaded = cli::load_document(fixture("span.sys"));
        const auto& doc = std::get<cli::Document<FolfI>>(loaded.doc);
        c.expect(formal_is_covering(formal_minimal_cover(doc.formal), doc.formal),
                 "span.sys: minimal cover does not cover");
    }
    Rng rng(606060);
    ifl::RandomSystemOptions opts;
    for (int t = 0; t < 60 && c.ok; ++t) {
        const auto is = ifl::random_information_system(opts, rng);
        const auto ds = underlying(is);
        c.expect(is_covering(minimal_cover(ds), ds), "random system: minimal cover does not cover");
    }

    // span fixture: every covering channel over cores of up to 4 binary
    // symbols factors uniquely through the minimal cover
    {
        const auto loaded = cli::load_document(fixture("span.sys"));
        const auto& fs = std::get<cli::Document<FolfI>>(loaded.doc).formal;
        const auto min = formal_minimal_cover(fs);
        int channels = 0;
        std::vector<folf::RelSymbol> pool;
        for (int k = 1; k <= 4 && c.ok; ++k) {
            pool.push_back({"r" + std::to_string(k - 1), 2});
            const folf::FolfLanguage core{folf::make_signature(pool), folf::SchemaSet::default_set()};
            // identity edges force equal components, so covering channels
            // correspond to single symbol choices
            for (const auto& sym : core.signature.symbols) {
                FormalChannel<FolfI> candidate{core, {}};
                const folf::FolfMorphism comp{lang_r(), core, {{"R", sym.name}}};
                candidate.components = {comp, comp, comp};
                if (!formal_is_covering(candidate, fs)) continue;
                ++channels;
                try {
                    const auto med = formal_mediator(min, candidate, fs);
                    c.expect(med.map.at("R") == sym.name, "mediator picked the wrong symbol");
                } catch (const Error& e) {
                    c.expect(false, std::string("mediator failed: ") + e.what());
                }
            }
            // non-covering families must be rejected
            if (k >= 2) {
                FormalChannel<FolfI> skew{core,
                                          {folf::FolfMorphism{lang_r(), core, {{"R", "r0"}}},
                                           folf::FolfMorphism{lang_r(), core, {{"R", "r1"}}},
                                           folf::FolfMorphism{lang_r(), core, {{"R", "r0"}}}}};
                c.expect(!formal_is_covering(skew, fs), "skewed channel unexpectedly covers");
            }
        }
        c.expect(channels == 10, "expected 10 enumerated span channels, got " + std::to_string(channels));
    }

    // discrete fixture: exhaustive enumeration over small row-set cores
    {
        const auto loaded = cli::load_document(fixture("discrete.sys"));
        const auto ds = underlying(std::get<cli::Document<IfI>>(loaded.doc).system);
        const auto min = minimal_cover(ds);
        int channels = 0;
        for (const auto& core_lang : {ifl::make_language({"u"}), ifl::make_language({"u", "w"})}) {
            for (const auto& core_struct : ifl::enumerate_canonical_structures(core_lang)) {
                const IndexedStructure<IfI> core{core_lang, core_struct};
                for (const auto& c0 : IfI::enumerate_system_morphisms(ds.nodes[0], core)) {
                    if (IfI::check_system_morphism(c0, ds.nodes[0], core)) continue;
                    for (const auto& c1 : IfI::enumerate_system_morphisms(ds.nodes[1], core)) {
                        if (IfI::check_system_morphism(c1, ds.nodes[1], core)) continue;
                        ++channels;
                        try {
                            const auto med = mediator(min, Channel<IfI>{core, {c0, c1}}, ds);
                            c.expect(!IfI::check_system_morphism(med, min.core, core).has_value(),
                                     "mediator is not a valid infomorphism");
                        } catch (const Error& e) {
                            c.expect(false, std::string("mediator failed: ") + e.what());
                        }
                    }
                }
            }
        }
        c.expect(channels > 0, "no covering channels enumerated for the discrete fixture");
        if (c.ok) c.detail = "all covers verified; " + std::to_string(channels) + " discrete + 10 span channels";
    }
    return c;
}

// --------------------------------------------------------------------------
// 7. theorem reproductions.

Criterion criterion7() {
    Criterion c;
    Rng rng(777777);

    // discrete shape = pointwise consequence, exactly (node theories with
    // nonempty models; an instance-inconsistent node poisons the core)
    ifl::RandomSystemOptions discrete;
    discrete.max_edges = 0;
    discrete.require_nonempty_models = true;
    for (int t = 0; t < 60 && c.ok; ++t) {
        const auto is = ifl::random_information_system(discrete, rng);
        const auto sc = system_consequence(is, kBound);
        for (std::size_t i = 0; i < is.nodes.size(); ++i)
            c.expect(sc.nodes[i].theory == consequence(is.nodes[i].specification(), kBound).sentences,
                     "discrete system consequence differs from pointwise consequence");
    }

    // constant system = constant consequence of the meet, exactly
    {
        const auto loaded = cli::load_document(fixture("constant.sys"));
        const auto& is = std::get<cli::Document<IfI>>(loaded.doc).system;
        std::vector<Specification<IfI>> specs;
        for (const auto& node : is.nodes) specs.push_back(node.specification());
        const auto closed = consequence(spec_meet<IfI>(specs), kBound).sentences;
        const auto sc = system_consequence(is, kBound);
        for (std::size_t i = 0; i < sc.nodes.size(); ++i)
            c.expect(sc.nodes[i].theory == closed, "constant system consequence is not the meet's consequence");
    }

    // res(IS#) <= (res IS)# pointwise on 100 random systems; sound systems
    // satisfy IS# = res((inc IS)#) exactly
    ifl::RandomSystemOptions opts;
    for (int t = 0; t < 100 && c.ok; ++t) {
        const auto is = ifl::random_information_system(opts, rng);
        const auto res = restrict_system(is, kBound);
        const auto left = restrict_system(system_consequence(is, kBound), kBound);
        const auto right = system_consequence(res, kBound, FlowKind::Sound);
        c.expect(pointwise_leq(left, right, kBound), "res(IS#) is not below (res IS)#");

        const auto sound_sc = system_consequence(res, kBound, FlowKind::Sound);
        const auto via_inc = restrict_system(system_consequence(include_system(res, kBound), kBound), kBound);
        for (std::size_t i = 0; i < res.nodes.size(); ++i)
            c.expect(sound_sc.nodes[i].theory == via_inc.nodes[i].theory,
                     "sound consequence differs from res((inc IS)#)");
    }

    if (c.ok) c.detail = "discrete, constant, restriction and soundness identities hold";
    return c;
}

// --------------------------------------------------------------------------
// 8. oracle equivalence: naive double loop over all row-set structures and
//    all universe sentences, implemented apart from the engine.

namespace oracle {

using Row = std::set<std::string>;
using Structure = std::set<Row>;

bool satisfies(const Structure& rows, const ifl::Sequent& s) {
    for (const auto& row : rows) {
        bool matches = true;
        for (const auto& g : s.antecedent)
            if (!row.count(g)) { matches = false; break; }
        if (!matches) continue;
        bool hits = false;
        for (const auto& d : s.succedent)
            if (row.count(d)) { hits = true; break; }
        if (!hits) return false;
    }
    return true;
}

std::vector<ifl::Sequent> consequence(const ifl::IfLanguage& lang, const std::vector<ifl::Sequent>& theory) {
    std::vector<Row> rows{{}};
    for (const auto& t : lang.types) {
        std::vector<Row> next;
        for (const auto& r : rows) {
            next.push_back(r);
            Row with = r;
            with.insert(t);
            next.push_back(std::move(with));
        }
        rows = std::move(next);
    }
    std::vector<Structure> structures{{}};
    for (const auto& r : rows) {
        std::vector<Structure> next;
        for (const auto& s : structures) {
            next.push_back(s);
            Structure with = s;
            with.insert(r);
            next.push_back(std::move(with));
        }
        structures = std::move(next);
    }
    std::vector<ifl::Sequent> out;
    for (const auto& candidate : ifl::sentence_universe(lang)) {
        bool entailed = true;
        for (const auto& m : structures) {
            bool model = true;
            for (const auto& ax : theory)
                if (!satisfies(m, ax)) { model = false; break; }
            if (model && !satisfies(m, candidate)) { entailed = false; break; }
        }
        if (entailed) out.push_back(candidate);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oracle

Criterion criterion8() {
    Criterion c;
    Rng rng(888);
    for (int t = 0; t < 50 && c.ok; ++t) {
        const ifl::IfLanguage lang = ifl::random_language(rng, 2);
        const auto theory = ifl::random_theory(lang, rng, 3);
        const auto engine = consequence(make_specification<IfI>(lang, theory), kBound).sentences;
        c.expect(engine == oracle::consequence(lang, theory), "engine and oracle disagree");
    }
    if (c.ok) c.detail = "50 random specifications agree with the brute-force oracle";
    return c;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria = {
        {"1 span example", criterion1},
        {"2 closure laws", criterion2},
        {"3 adjunctions", criterion3},
        {"4 preservation", criterion4},
        {"5 satisfaction invariance", criterion5},
        {"6 channels and mediators", criterion6},
        {"7 theorem reproductions", criterion7},
        {"8 oracle equivalence", criterion8},
    };
    bool all_ok = true;
    for (const auto& [name, run] : criteria) {
        Criterion result;
        try {
            result = run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        all_ok = all_ok && result.ok;
        std::cout << "criterion " << name << ": " << (result.ok ? "PASS" : "FAIL")
                  << (result.detail.empty() ? "" : " - " + result.detail) << "\n";
    }
    return all_ok ? 0 : 1;
}
