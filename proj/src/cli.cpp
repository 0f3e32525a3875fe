#include "unitring/cli.hpp"

#include "unitring/bigint.hpp"
#include "unitring/errors.hpp"
#include "unitring/finite_field.hpp"
#include "unitring/format.hpp"
#include "unitring/group_ring.hpp"
#include "unitring/rings.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace unitring {
namespace {

using nlohmann::ordered_json;

constexpr const char* kGroupGrammar =
    "C<n>, D<n>, K8, Q16, E2^<k>, S3, products joined with 'x', or @file.json";
constexpr const char* kFieldGrammar = "GF(p), GF(p^n), GF(p)(t), algcl(p)";

std::string strip_all_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

int parse_count(const std::string& s, const std::string& what, std::size_t pos) {
    if (!all_digits(s) || s.size() > 6)
        fail_parse("ParseError",
                   "expected a small positive integer for " + what + " at position " +
                       std::to_string(pos) + ", got '" + s + "'");
    return std::stoi(s);
}

// ---------- group specs ----------

GroupPtr parse_group_token(const std::string& tok, std::size_t pos) {
    if (tok.empty())
        fail_parse("ParseError", "empty group factor at position " + std::to_string(pos) +
                                     " (grammar: " + kGroupGrammar + ")");
    if (tok == "K8") return quaternion8();
    if (tok == "Q16") return generalized_quaternion16();
    if (tok == "S3") return symmetric3();
    if (tok.rfind("E2^", 0) == 0)
        return elementary_abelian_2(parse_count(tok.substr(3), "E2 rank", pos + 3));
    if (tok[0] == 'C' && tok.size() > 1)
        return cyclic_group(parse_count(tok.substr(1), "cyclic order", pos + 1));
    if (tok[0] == 'D' && tok.size() > 1)
        return dihedral_group(parse_count(tok.substr(1), "dihedral parameter", pos + 1));
    fail_parse("ParseError", "unrecognized group factor '" + tok + "' at position " +
                                 std::to_string(pos) + " (grammar: " + kGroupGrammar + ")");
}

GroupPtr parse_group_product(const std::string& s) {
    GroupPtr acc;
    std::size_t start = 0;
    for (;;) {
        std::size_t x = s.find('x', start);
        std::string tok = (x == std::string::npos) ? s.substr(start) : s.substr(start, x - start);
        GroupPtr g = parse_group_token(tok, start);
        acc = acc ? direct_product(acc, g) : g;
        if (x == std::string::npos) break;
        start = x + 1;
    }
    return acc;
}

ordered_json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_validation("FileNotFound", "cannot open '" + path + "'");
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail_parse("ParseError", "invalid JSON in '" + path + "': " + e.what());
    }
}

template <class T>
T json_get(const ordered_json& j, const std::string& what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception& e) {
        fail_parse("ParseError", "malformed " + what + ": " + e.what());
    }
}

GroupPtr group_from_json(const ordered_json& j, const std::string& where) {
    if (j.is_array()) {
        auto table = json_get<std::vector<std::vector<int>>>(j, "Cayley table in " + where);
        return group_from_table(std::move(table));
    }
    if (j.is_object() && j.contains("table")) {
        auto table = json_get<std::vector<std::vector<int>>>(j.at("table"),
                                                             "Cayley table in " + where);
        std::vector<std::string> names;
        if (j.contains("names"))
            names = json_get<std::vector<std::string>>(j.at("names"), "names in " + where);
        return group_from_table(std::move(table), std::move(names));
    }
    fail_parse("ParseError", where + " must hold a Cayley table (array of rows, or an object "
                             "with \"table\" and optional \"names\")");
}

} // namespace

ParsedGroup parse_group_spec(const std::string& text) {
    ParsedGroup out;
    out.text = text;
    std::string s = detail::trim_spaces(text);
    if (s.empty()) fail_parse("ParseError", "empty group spec (grammar: " + std::string(kGroupGrammar) + ")");
    if (s[0] == '@') {
        const std::string path = s.substr(1);
        ordered_json j = load_json_file(path);
        const bool structured =
            j.is_object() && (j.contains("free_rank") || j.contains("actions") || j.contains("torsion"));
        if (!structured) {
            out.finite = group_from_json(j, "'" + path + "'");
            return out;
        }
        if (!j.contains("torsion"))
            fail_parse("ParseError", "'" + path + "': structured spec needs a \"torsion\" entry");
        GroupPtr torsion;
        const ordered_json& jt = j.at("torsion");
        if (jt.is_string()) {
            ParsedGroup inner = parse_group_spec(jt.get<std::string>());
            if (inner.is_structured())
                fail_parse("ParseError", "'" + path + "': the torsion part must itself be finite");
            torsion = inner.finite;
        } else {
            torsion = group_from_json(jt, "\"torsion\" in '" + path + "'");
        }
        int rank = 0;
        if (j.contains("free_rank")) rank = json_get<int>(j.at("free_rank"), "\"free_rank\"");
        std::vector<std::vector<int>> actions;
        if (j.contains("actions"))
            actions = json_get<std::vector<std::vector<int>>>(j.at("actions"), "\"actions\"");
        out.structured = make_structured(std::move(torsion), rank, std::move(actions));
        return out;
    }
    out.finite = parse_group_product(strip_all_spaces(s));
    return out;
}

FieldDescriptor parse_field_spec(const std::string& text) {
    const std::string s = strip_all_spaces(text);
    auto bad = [&]() -> FieldDescriptor {
        fail_parse("ParseError",
                   "unrecognized field spec '" + text + "' (grammar: " + kFieldGrammar + ")");
    };
    if (s.rfind("algcl(", 0) == 0 && s.size() > 7 && s.back() == ')') {
        const std::string inner = s.substr(6, s.size() - 7);
        return FieldDescriptor::algebraic_infinite(
            static_cast<std::uint32_t>(parse_count(inner, "characteristic", 6)));
    }
    if (s.rfind("GF(", 0) != 0) return bad();
    const std::size_t close = s.find(')', 3);
    if (close == std::string::npos) return bad();
    const std::string inner = s.substr(3, close - 3);
    const std::string rest = s.substr(close + 1);
    std::uint32_t p = 0, n = 1;
    const std::size_t caret = inner.find('^');
    if (caret == std::string::npos) {
        p = static_cast<std::uint32_t>(parse_count(inner, "characteristic", 3));
    } else {
        p = static_cast<std::uint32_t>(parse_count(inner.substr(0, caret), "characteristic", 3));
        n = static_cast<std::uint32_t>(
            parse_count(inner.substr(caret + 1), "extension degree", 4 + caret));
    }
    if (rest.empty()) return FieldDescriptor::finite(p, n);
    if (rest == "(t)") {
        if (n != 1 || !is_prime_u32(p))
            fail_parse("ParseError", "the function-field base must be a prime field: GF(p)(t)");
        return FieldDescriptor::function_field(p);
    }
    return bad();
}

namespace {

// ---------- report plumbing ----------

struct Emitted {
    ordered_json inputs = ordered_json::object();
    std::string answer;
    std::string rule;
    ordered_json evidence = ordered_json::object();
    std::optional<ordered_json> witness;
    std::string summary;
};

ordered_json subgroup_names(const Subgroup& h) {
    ordered_json out = ordered_json::array();
    for (int g : h.elements) out.push_back(h.parent->name(g));
    return out;
}

GroupPtr require_finite(const ParsedGroup& pg, const std::string& verb) {
    if (!pg.is_structured()) return pg.finite;
    if (is_finite(*pg.structured)) return pg.structured->torsion;
    fail_validation("BadParams", verb + " expects a finite group, but '" + pg.text +
                                     "' has free rank " +
                                     std::to_string(pg.structured->free_rank));
}

// ---------- verb handlers ----------

Emitted handle_classify_hypercentral(const std::string& group_text) {
    Emitted e;
    e.inputs["group"] = group_text;
    ParsedGroup pg = parse_group_spec(group_text);
    HypercentralVerdict v;
    if (pg.is_structured()) {
        v = classify_hypercentral_structured(*pg.structured);
        ordered_json orders = ordered_json::array();
        for (const auto& h : torsion_commutator_chain(*pg.structured)) orders.push_back(h.order());
        e.evidence["chain_orders"] = orders;
    } else {
        v = classify_hypercentral_finite(pg.finite);
    }
    e.evidence["reason"] = v.reason;
    if (v.decomposition) {
        const auto& d = *v.decomposition;
        e.evidence["decomposition"] = ordered_json{
            {"quaternion", subgroup_names(d.quaternion)},
            {"elementary", subgroup_names(d.elementary)},
            {"i", d.quaternion.parent->name(d.i_index)},
            {"j", d.quaternion.parent->name(d.j_index)},
        };
    }
    if (!v.action_classes.empty()) {
        ordered_json tags = ordered_json::array();
        for (K8Action a : v.action_classes) tags.push_back(to_string(a));
        e.evidence["action_classes"] = tags;
    }
    e.answer = v.answer_text();
    switch (v.answer) {
    case HCAnswer::Yes: e.rule = std::string("case-") + v.case_tag; break;
    case HCAnswer::No: e.rule = "no-case"; break;
    case HCAnswer::Indeterminate: e.rule = "chain-budget"; break;
    }
    e.summary = e.answer + (v.reason.empty() ? "" : " (" + v.reason + ")");
    return e;
}

GroupDescriptor descriptor_from_spec(const std::string& group_text, std::uint32_t p) {
    std::string s = strip_all_spaces(group_text);
    if (s.rfind("infinite", 0) == 0) {
        const std::string rest = s.substr(8);
        if (rest.empty()) return infinite_descriptor(false, false, group_text);
        if (rest == ":torsion") return infinite_descriptor(true, false, group_text);
        if (rest == ":pprime-torsion") return infinite_descriptor(true, true, group_text);
        fail_parse("ParseError", "unknown infinite-group descriptor '" + group_text +
                                     "' (use infinite, infinite:torsion, or "
                                     "infinite:pprime-torsion)");
    }
    ParsedGroup pg = parse_group_spec(group_text);
    if (pg.is_structured() && !is_finite(*pg.structured)) {
        const auto& t = *pg.structured->torsion;
        bool torsion = t.order() > 1;
        bool pprime = false;
        for (int x = 1; x < t.order(); ++x)
            if (t.element_order(x) % static_cast<int>(p) != 0) {
                pprime = true;
                break;
            }
        return infinite_descriptor(torsion, pprime, group_text);
    }
    return finite_descriptor(require_finite(pg, "classify-hyperbolic"), group_text);
}

ordered_json witness_json(const Z2Witness& w, const std::string& field_text) {
    return ordered_json{
        {"field", field_text},
        {"group", "order " + std::to_string(w.group->order())},
        {"g0", w.group->name(w.g0)},
        {"u1", to_text(w.u1)},
        {"u2", to_text(w.u2)},
        {"independence_bound", w.verified_bound},
        {"verified", true},
    };
}

Emitted handle_classify_hyperbolic(const std::string& group_text, const std::string& field_text,
                                   const std::string& about_text, bool want_witness, int ibound) {
    Emitted e;
    e.inputs["group"] = group_text;
    e.inputs["field"] = field_text;
    e.inputs["about"] = about_text;
    e.inputs["independence_bound"] = ibound;
    FieldDescriptor fd = parse_field_spec(field_text);
    About about = (about_text == "U") ? About::U : About::V;
    GroupDescriptor gd = descriptor_from_spec(group_text, fd.p);
    HyperbolicVerdict v = classify_hyperbolic(fd, gd, about, ibound);
    FieldTraits tr = field_traits(fd);
    e.evidence["field"] = ordered_json{
        {"finite", tr.is_finite},
        {"algebraic_over_prime", tr.is_algebraic_over_prime},
        {"transcendence_degree", tr.tr_deg},
        {"characteristic", tr.characteristic},
    };
    ordered_json notes = ordered_json::array();
    for (const auto& n : v.notes) notes.push_back(n);
    e.evidence["notes"] = notes;
    if (want_witness && v.witness) e.witness = witness_json(*v.witness, fd.to_string());
    e.answer = to_string(v.answer);
    e.rule = v.rule;
    e.summary = e.answer + " [" + v.rule + "]" +
                (v.witness ? " with a verified Z^2 witness" : "");
    return e;
}

Emitted handle_enumerate_units(const std::string& field_text, const std::string& group_text,
                               std::uint64_t budget) {
    Emitted e;
    e.inputs["field"] = field_text;
    e.inputs["group"] = group_text;
    e.inputs["budget"] = budget;
    FieldDescriptor fd = parse_field_spec(field_text);
    if (fd.kind != FieldKind::Finite)
        fail_validation("BadParams", "enumeration needs a finite coefficient field, got '" +
                                         field_text + "'");
    GroupPtr g = require_finite(parse_group_spec(group_text), "enumerate-units");
    FFRing ring(fd.p, fd.n);
    EnumeratedUnitGroup v = enumerate_v_kg(ring, g, budget);
    UnitGroupStructure s = unit_group_structure(v);
    e.answer = "|V(KG)| = " + std::to_string(s.order);
    e.rule = "exhaustive-enumeration";
    e.evidence["order"] = s.order;
    e.evidence["center_order"] = s.center_order;
    e.evidence["series_orders"] = s.series_orders;
    if (s.nilpotency_class)
        e.evidence["nilpotency_class"] = *s.nilpotency_class;
    else
        e.evidence["nilpotency_class"] = nullptr;
    if (s.order <= 64) {
        ordered_json elems = ordered_json::array();
        for (const auto& u : v.carrier) elems.push_back(to_text(u));
        e.evidence["elements"] = elems;
    }
    e.summary = e.answer + ", center " + std::to_string(s.center_order) +
                (s.nilpotency_class
                     ? ", nilpotent of class " + std::to_string(*s.nilpotency_class)
                     : ", not nilpotent");
    return e;
}

Emitted handle_unit_search(const std::string& group_text, int bound, std::uint64_t budget) {
    Emitted e;
    e.inputs["group"] = group_text;
    e.inputs["bound"] = bound;
    e.inputs["budget"] = budget;
    GroupPtr g = require_finite(parse_group_spec(group_text), "unit-search");
    std::vector<GroupRingElem<IntRing>> units = bounded_unit_search_zg(g, bound, budget);
    bool trivial_only = true;
    ordered_json texts = ordered_json::array();
    for (const auto& u : units) {
        if (!is_trivial_unit(u)) trivial_only = false;
        if (texts.size() < 512) texts.push_back(to_text(u));
    }
    e.answer = std::to_string(units.size()) + " units";
    e.rule = "exhaustive-search";
    e.evidence["count"] = units.size();
    e.evidence["trivial_units_only"] = trivial_only;
    e.evidence["units"] = texts;
    e.evidence["truncated"] = units.size() > 512;
    e.summary = e.answer + " with coefficients in [-" + std::to_string(bound) + ", " +
                std::to_string(bound) + "]" + (trivial_only ? ", all trivial" : "");
    return e;
}

Emitted handle_witness_z2(const std::string& field_text, const std::string& group_text,
                          const std::string& element_text, int ibound) {
    Emitted e;
    e.inputs["field"] = field_text;
    e.inputs["group"] = group_text;
    if (!element_text.empty()) e.inputs["element"] = element_text;
    e.inputs["independence_bound"] = ibound;
    FieldDescriptor fd = parse_field_spec(field_text);
    if (fd.kind != FieldKind::FunctionField)
        fail_validation("BadParams",
                        "witness construction works over GF(p)(t), got '" + field_text + "'");
    GroupPtr g = require_finite(parse_group_spec(group_text), "witness-z2");
    int g0 = -1;
    if (!element_text.empty()) {
        auto idx = g->index_of(detail::trim_spaces(element_text));
        if (!idx)
            fail_validation("UnknownElement",
                            "'" + element_text + "' is not an element of '" + group_text + "'");
        g0 = *idx;
    } else {
        for (int x = 1; x < g->order(); ++x)
            if (g->element_order(x) % static_cast<int>(fd.p) != 0) {
                g0 = x;
                break;
            }
        if (g0 < 0)
            fail_precondition("NoCoprimeTorsion",
                              "no nontrivial element of '" + group_text +
                                  "' has order coprime to " + std::to_string(fd.p));
    }
    Z2Witness w = construct_z2_witness(fd.p, g, g0);
    bool ok = verify_z2_witness(w, ibound);
    w.verified_bound = ok ? ibound : 0;
    e.answer = ok ? "verified" : "refuted";
    e.rule = "direct-construction";
    e.evidence["g0"] = g->name(g0);
    e.evidence["g0_order"] = g->element_order(g0);
    e.witness = witness_json(w, fd.to_string());
    e.summary = e.answer + ": u1, u2 generate a free abelian rank-2 subgroup (checked on [-" +
                std::to_string(ibound) + ", " + std::to_string(ibound) + "]^2)";
    if (!ok) e.summary = "refuted: the constructed pair failed verification";
    return e;
}

Emitted handle_central_series(const std::string& group_text) {
    Emitted e;
    e.inputs["group"] = group_text;
    GroupPtr g = require_finite(parse_group_spec(group_text), "central-series");
    CentralSeries cs = upper_central_series(g);
    ordered_json orders = ordered_json::array();
    for (const auto& z : cs.series) orders.push_back(z.order());
    e.evidence["orders"] = orders;
    if (cs.nilpotency_class)
        e.evidence["nilpotency_class"] = *cs.nilpotency_class;
    else
        e.evidence["nilpotency_class"] = nullptr;
    if (g->order() <= 64) {
        ordered_json levels = ordered_json::array();
        for (const auto& z : cs.series) levels.push_back(subgroup_names(z));
        e.evidence["levels"] = levels;
    }
    e.rule = "upper-central-series";
    if (cs.nilpotency_class) {
        e.answer = "nilpotent, class " + std::to_string(*cs.nilpotency_class);
        e.summary = e.answer;
    } else {
        e.answer = "not nilpotent";
        e.summary = "not nilpotent (series stalls at order " +
                    std::to_string(cs.series.back().order()) + ")";
    }
    return e;
}

Emitted handle_verify_dedekind(const std::string& group_text) {
    Emitted e;
    e.inputs["group"] = group_text;
    GroupPtr g = require_finite(parse_group_spec(group_text), "verify-dedekind");
    DedekindReport r = verify_dedekind_conditions(g);
    auto item = [](bool holds, const std::string& cx) {
        ordered_json j{{"holds", holds}};
        if (!holds) j["counterexample"] = cx;
        return j;
    };
    e.evidence["subgroups_normal"] = item(r.subgroups_normal, r.normal_counterexample);
    e.evidence["conjugates_are_powers"] = item(r.conj_power, r.conj_counterexample);
    e.evidence["odd_order_central"] = item(r.odd_central, r.odd_counterexample);
    e.evidence["mixed_torsion_abelian"] = item(r.mixed_abelian, r.mixed_counterexample);
    e.evidence["mixed_condition_vacuous"] = r.mixed_vacuous;
    e.answer = r.all_pass() ? "satisfied" : "violated";
    e.rule = "necessary-conditions";
    e.summary = r.all_pass() ? "all four conditions hold"
                             : "fails " + r.first_failure();
    return e;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"unitring: unit groups of group rings - classification, enumeration, witnesses"};
    app.require_subcommand(1);

    std::string group_text, field_text, element_text, output_path;
    std::string about_text = "V";
    int bound = 1, ibound = 5;
    std::uint64_t enum_budget = std::uint64_t{1} << 20;
    std::uint64_t search_budget = 10'000'000;
    bool want_witness = false, no_timings = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output", output_path,
                        "write the JSON report to this file instead of stdout");
        sub->add_flag("--no-timings", no_timings,
                      "omit the timings object so reports are byte-stable");
    };
    auto add_group = [&](CLI::App* sub) {
        sub->add_option("--group", group_text, std::string("group spec: ") + kGroupGrammar)
            ->required();
    };

    CLI::App* c_hc = app.add_subcommand("classify-hypercentral",
                                        "decide whether V(KG) is hypercentral for char-2 K");
    add_group(c_hc);
    add_common(c_hc);

    CLI::App* c_hy = app.add_subcommand("classify-hyperbolic",
                                        "decide hyperbolicity of the unit group over K");
    add_group(c_hy);
    c_hy->add_option("--field", field_text, std::string("field spec: ") + kFieldGrammar)
        ->required();
    c_hy->add_option("--about", about_text, "which unit group: V or U")
        ->check(CLI::IsMember({"V", "U"}));
    c_hy->add_flag("--witness", want_witness, "include the Z^2 witness in the report");
    c_hy->add_option("--independence-bound", ibound,
                     "exponent box half-width for witness verification");
    add_common(c_hy);

    CLI::App* c_en = app.add_subcommand("enumerate-units",
                                        "enumerate V(KG) over a finite field exhaustively");
    c_en->add_option("--field", field_text, "finite field spec: GF(p) or GF(p^n)")->required();
    add_group(c_en);
    c_en->add_option("--budget", enum_budget, "candidate budget (default 2^20)");
    add_common(c_en);

    CLI::App* c_us = app.add_subcommand("unit-search",
                                        "find all units of ZG with coefficients in [-B, B]");
    add_group(c_us);
    c_us->add_option("--bound", bound, "coefficient box half-width B");
    c_us->add_option("--budget", search_budget, "candidate budget (default 10^7)");
    add_common(c_us);

    CLI::App* c_wz = app.add_subcommand("witness-z2",
                                        "construct and verify a Z^2 of units in GF(p)(t)G");
    c_wz->add_option("--field", field_text, "function field spec: GF(p)(t)")->required();
    add_group(c_wz);
    c_wz->add_option("--element", element_text,
                     "torsion element label for the averaging idempotent (default: first "
                     "nontrivial element of order coprime to p)");
    c_wz->add_option("--independence-bound", ibound,
                     "exponent box half-width for verification");
    add_common(c_wz);

    CLI::App* c_cs = app.add_subcommand("central-series",
                                        "upper central series and nilpotency class");
    add_group(c_cs);
    add_common(c_cs);

    CLI::App* c_vd = app.add_subcommand("verify-dedekind",
                                        "check the four conditions hypercentral units force on G");
    add_group(c_vd);
    add_common(c_vd);

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("unitring");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& pe) {
        const int rc = app.exit(pe, out, err);
        return rc == 0 ? 0 : 1;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        Emitted e;
        std::string verb;
        if (c_hc->parsed()) {
            verb = "classify-hypercentral";
            e = handle_classify_hypercentral(group_text);
        } else if (c_hy->parsed()) {
            verb = "classify-hyperbolic";
            e = handle_classify_hyperbolic(group_text, field_text, about_text, want_witness,
                                           ibound);
        } else if (c_en->parsed()) {
            verb = "enumerate-units";
            e = handle_enumerate_units(field_text, group_text, enum_budget);
        } else if (c_us->parsed()) {
            verb = "unit-search";
            e = handle_unit_search(group_text, bound, search_budget);
        } else if (c_wz->parsed()) {
            verb = "witness-z2";
            e = handle_witness_z2(field_text, group_text, element_text, ibound);
        } else if (c_cs->parsed()) {
            verb = "central-series";
            e = handle_central_series(group_text);
        } else if (c_vd->parsed()) {
            verb = "verify-dedekind";
            e = handle_verify_dedekind(group_text);
        } else {
            err << "error: no subcommand given\n";
            return 1;
        }

        ordered_json report;
        report["schema_version"] = 1;
        report["question"] = verb;
        report["inputs"] = e.inputs;
        report["answer"] = e.answer;
        report["rule"] = e.rule;
        report["evidence"] = e.evidence;
        if (e.witness) report["witness"] = *e.witness;
        if (!no_timings) {
            const double ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
            report["timings"] = ordered_json{{"total_ms", ms}};
        }
        const std::string text = report.dump(2) + "\n";
        if (!output_path.empty()) {
            std::ofstream f(output_path);
            if (!f) fail_validation("BadParams", "cannot write output file '" + output_path + "'");
            f << text;
        } else {
            out << text;
        }
        err << verb << ": " << e.summary << "\n";
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::Parse:
        case ErrorKind::Validation: return 1;
        case ErrorKind::Budget: return 2;
        case ErrorKind::Precondition: return 3;
        }
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

} // namespace unitring
