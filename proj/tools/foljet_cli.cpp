// Command-line front end: parse expressions, dispatch to the library, emit
// deterministic JSON or text reports.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "foljet/foljet.hpp"

using json = nlohmann::ordered_json;
using namespace foljet;

namespace {

struct CommonOpts {
    std::string vars;
    std::string format = "json";
    long budget = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--vars", o.vars,
                    "comma-separated variable names (inferred if omitted)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--budget", o.budget, "Groebner step budget");
}

ContextPtr make_context(const CommonOpts& o,
                        const std::vector<std::string>& exprs) {
    std::vector<std::string> names;
    if (!o.vars.empty()) {
        std::string cur;
        for (char c : o.vars + ",") {
            if (c == ',') {
                if (!cur.empty()) names.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur += c;
            }
        }
    } else {
        names = infer_variables(exprs);
    }
    if (names.empty()) throw parse_error("no variables found", 0);
    return VarContext::base(names);
}

void require_planar(const ContextPtr& ctx) {
    if (ctx->size() != 2)
        throw unsupported_error("this command needs exactly two variables");
}

json point_json(const std::vector<Rational>& P) {
    json a = json::array();
    for (auto& x : P) a.push_back(to_string(x));
    return a;
}

json gens_json(const Ideal& I) {
    json a = json::array();
    for (auto& g : I.generators) a.push_back(g.to_string());
    return a;
}

struct Emitter {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    json diagnostics = json::object();
    std::string format;
    std::vector<std::string> text_lines;

    void line(const std::string& s) { text_lines.push_back(s); }

    int emit() const {
        if (format == "text") {
            for (auto& l : text_lines) std::cout << l << "\n";
        } else {
            json doc;
            doc["command"] = command;
            doc["inputs"] = inputs;
            doc["result"] = result;
            doc["diagnostics"] = diagnostics;
            std::cout << doc.dump(2) << "\n";
        }
        return 0;
    }
};

json tangency_json(const TangencyVerdict& v) {
    json r;
    r["mode"] = v.mode == TangencyMode::Weak     ? "weak"
                : v.mode == TangencyMode::Strong ? "strong"
                                                 : "full";
    r["containment"] =
        v.containment == ContainmentMode::Scheme ? "scheme" : "set";
    r["tangent"] = v.result;
    r["maxOrderChecked"] = v.maxOrderChecked;
    if (v.failureOrder) r["failureOrder"] = *v.failureOrder;
    if (v.failureGenerator) r["failureGenerator"] = v.failureGenerator->to_string();
    return r;
}

json class_json(const SingularityClass& c) {
    json r;
    r["tag"] = to_string(c.tag);
    if (c.eigen) {
        json e;
        e["trace"] = to_string(c.eigen->trace);
        e["det"] = to_string(c.eigen->det);
        switch (c.eigen->kind) {
            case EigenKind::RationalPair: e["kind"] = "RationalPair"; break;
            case EigenKind::Double: e["kind"] = "Double"; break;
            case EigenKind::IrrationalRealPair: e["kind"] = "IrrationalRealPair"; break;
            case EigenKind::ComplexPair: e["kind"] = "ComplexPair"; break;
        }
        if (c.eigen->lambda1) e["lambda1"] = to_string(*c.eigen->lambda1);
        if (c.eigen->lambda2) e["lambda2"] = to_string(*c.eigen->lambda2);
        r["eigen"] = e;
    }
    if (c.typeC_r) r["typeC_r"] = *c.typeC_r;
    if (c.typeC_a) r["typeC_a"] = to_string(*c.typeC_a);
    return r;
}

json node_json(const ResolutionReport& rep, int idx) {
    const auto& nd = rep.nodes[static_cast<std::size_t>(idx)];
    json n;
    if (nd.chart) {
        n["chart"] = nd.chart->description();
        n["exceptionalMultiplicity"] = nd.transform->exceptionalMultiplicity;
        n["exceptionalInvariant"] = nd.transform->exceptionalInvariant;
    }
    n["form"] = nd.form.to_string();
    n["compositeFactor"] = nd.compositeFactor.to_string();
    json pts = json::array();
    for (auto& e : nd.points) {
        json p;
        p["point"] = point_json(e.point);
        p["class"] = to_string(e.cls.tag);
        json kids = json::array();
        for (int c : e.children) kids.push_back(node_json(rep, c));
        p["children"] = kids;
        pts.push_back(p);
    }
    n["points"] = pts;
    if (!nd.residual.generators.empty())
        n["residual"] = gens_json(nd.residual);
    return n;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"jet-space and foliation-singularity calculator"};
    app.require_subcommand(1);

    // jets
    auto* jets = app.add_subcommand("jets", "jet ideals of schemes and foliations");
    jets->require_subcommand(1);
    CommonOpts jso;
    std::string js_ideal, js_point;
    int js_order = 1;
    auto* jsch = jets->add_subcommand("scheme", "jet ideal of a scheme");
    jsch->add_option("--ideal", js_ideal, "defining ideal [f, g, ...]")->required();
    jsch->add_option("--order", js_order, "jet order")->required();
    jsch->add_option("--point", js_point, "base the jets at this point");
    add_common(jsch, jso);
    CommonOpts jfo;
    std::string jf_form, jf_point;
    int jf_order = 1;
    auto* jfol = jets->add_subcommand("foliation", "jet ideal of a foliation");
    jfol->add_option("--form", jf_form, "defining 1-form")->required();
    jfol->add_option("--order", jf_order, "jet order")->required();
    jfol->add_option("--point", jf_point, "base the jets at this point");
    add_common(jfol, jfo);

    // tangency
    CommonOpts to_;
    std::string t_mode = "strong", t_ideal, t_form, t_containment = "scheme";
    int t_order = 5;
    auto* tangency = app.add_subcommand("tangency", "jet-space tangency of a scheme");
    tangency->add_option("--mode", t_mode, "weak, strong, or full")
        ->check(CLI::IsMember({"weak", "strong", "full"}));
    tangency->add_option("--ideal", t_ideal, "scheme ideal")->required();
    tangency->add_option("--form", t_form, "foliation 1-form")->required();
    tangency->add_option("--order", t_order, "highest order checked");
    tangency->add_option("--containment", t_containment, "scheme or set")
        ->check(CLI::IsMember({"scheme", "set"}));
    add_common(tangency, to_);

    // classify
    CommonOpts co;
    std::string c_form, c_point;
    auto* classify = app.add_subcommand("classify", "classify a planar singular point");
    classify->add_option("--form", c_form, "1-form")->required();
    classify->add_option("--point", c_point, "point")->required();
    add_common(classify, co);

    // saturate / integrable / singular
    CommonOpts so;
    std::string s_form;
    auto* saturate = app.add_subcommand("saturate", "divide out the coefficient gcd");
    saturate->add_option("--form", s_form, "1-form")->required();
    add_common(saturate, so);
    CommonOpts io;
    std::string i_form;
    auto* integrable = app.add_subcommand("integrable", "Frobenius condition");
    integrable->add_option("--form", i_form, "1-form")->required();
    add_common(integrable, io);
    CommonOpts go;
    std::string g_form;
    auto* singular = app.add_subcommand("singular", "singular-locus ideal");
    singular->add_option("--form", g_form, "1-form")->required();
    add_common(singular, go);

    // blowup
    CommonOpts bo;
    std::string b_form, b_point;
    int b_chart = 0;
    auto* blowup = app.add_subcommand("blowup", "transform through one blow-up chart");
    blowup->add_option("--form", b_form, "1-form")->required();
    blowup->add_option("--point", b_point, "centre")->required();
    blowup->add_option("--chart", b_chart, "chart index (0-based)");
    add_common(blowup, bo);

    // resolve
    CommonOpts ro;
    std::string r_form;
    int r_depth = 6;
    auto* resolve = app.add_subcommand("resolve", "iterated blow-up of singular points");
    resolve->add_option("--form", r_form, "1-form")->required();
    resolve->add_option("--max-depth", r_depth, "blow-up depth cap");
    add_common(resolve, ro);

    // probe
    auto* probe = app.add_subcommand("probe", "diagnostic probes");
    probe->require_subcommand(1);
    CommonOpts pdo;
    std::string pd_form;
    int pd_depth = 2;
    auto* pdic = probe->add_subcommand("dicritical", "search for a non-invariant exceptional divisor");
    pdic->add_option("--form", pd_form, "1-form")->required();
    pdic->add_option("--max-depth", pd_depth, "search depth");
    add_common(pdic, pdo);
    CommonOpts pno;
    std::string pn_form, pn_point;
    int pn_t = 2, pn_order = 4;
    auto* pnc = probe->add_subcommand("jets-vs-nc", "compare foliation jets with crossing-divisor jets");
    pnc->add_option("--form", pn_form, "1-form")->required();
    pnc->add_option("--t", pn_t, "number of divisor branches");
    pnc->add_option("--order", pn_order, "highest order compared");
    pnc->add_option("--point", pn_point, "point")->required();
    add_common(pnc, pno);

    // check
    auto* check = app.add_subcommand("check", "inequality checks");
    check->require_subcommand(1);
    CommonOpts oco;
    std::string oc_form, oc_g, oc_point;
    auto* ocrit = check->add_subcommand("order-criterion", "ord g <= 1 + min ord b_i");
    ocrit->add_option("--form", oc_form, "1-form")->required();
    ocrit->add_option("--g", oc_g, "candidate invariant curve")->required();
    ocrit->add_option("--point", oc_point, "point")->required();
    add_common(ocrit, oco);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Emitter em;
    try {
        if (jsch->parsed()) {
            em.format = jso.format;
            if (jso.budget > 0) groebner_default_budget() = jso.budget;
            auto ctx = make_context(jso, {js_ideal});
            auto J = jet_ideal_scheme(parse_ideal(js_ideal, ctx), js_order);
            em.command = "jets scheme";
            em.inputs["ideal"] = js_ideal;
            em.inputs["order"] = js_order;
            Ideal out = J.ideal();
            if (!js_point.empty()) {
                auto P = parse_point(js_point);
                em.inputs["point"] = point_json(P);
                out = jet_fiber(J, P).ideal();
            }
            em.result["generators"] = gens_json(out);
            for (auto& g : out.generators) em.line(g.to_string());
        } else if (jfol->parsed()) {
            em.format = jfo.format;
            if (jfo.budget > 0) groebner_default_budget() = jfo.budget;
            auto ctx = make_context(jfo, {jf_form});
            auto J = jet_ideal_foliation(parse_oneform(jf_form, ctx).b, jf_order);
            em.command = "jets foliation";
            em.inputs["form"] = jf_form;
            em.inputs["order"] = jf_order;
            Ideal out = J.ideal();
            if (!jf_point.empty()) {
                auto P = parse_point(jf_point);
                em.inputs["point"] = point_json(P);
                out = jet_fiber(J, P).ideal();
            }
            em.result["generators"] = gens_json(out);
            for (auto& g : out.generators) em.line(g.to_string());
        } else if (tangency->parsed()) {
            em.format = to_.format;
            if (to_.budget > 0) groebner_default_budget() = to_.budget;
            auto ctx = make_context(to_, {t_ideal, t_form});
            auto I = parse_ideal(t_ideal, ctx);
            auto w = parse_oneform(t_form, ctx);
            auto mode = t_containment == "set" ? ContainmentMode::Set
                                               : ContainmentMode::Scheme;
            TangencyVerdict v;
            if (t_mode == "weak") v = weak_tangency(I, w, mode);
            else if (t_mode == "full") v = full_tangency_up_to(I, w, t_order, mode);
            else v = strong_tangency_up_to(I, w, t_order, mode);
            em.command = "tangency";
            em.inputs["mode"] = t_mode;
            em.inputs["ideal"] = t_ideal;
            em.inputs["form"] = t_form;
            em.inputs["order"] = t_order;
            em.inputs["containment"] = t_containment;
            em.result = tangency_json(v);
            em.line(v.result ? "tangent" : "not tangent");
            if (v.failureOrder)
                em.line("fails at order " + std::to_string(*v.failureOrder));
        } else if (classify->parsed()) {
            em.format = co.format;
            auto ctx = make_context(co, {c_form});
            require_planar(ctx);
            auto P = parse_point(c_point);
            auto cls = classify_reduced_2d(parse_oneform(c_form, ctx), P);
            em.command = "classify";
            em.inputs["form"] = c_form;
            em.inputs["point"] = point_json(P);
            em.result = class_json(cls);
            em.line(to_string(cls.tag));
        } else if (saturate->parsed()) {
            em.format = so.format;
            auto ctx = make_context(so, {s_form});
            auto [f, sat] = saturate_form(parse_oneform(s_form, ctx));
            em.command = "saturate";
            em.inputs["form"] = s_form;
            em.result["factor"] = f.to_string();
            em.result["form"] = sat.to_string();
            em.line("factor: " + f.to_string());
            em.line("form: " + sat.to_string());
        } else if (integrable->parsed()) {
            em.format = io.format;
            auto ctx = make_context(io, {i_form});
            auto r = integrability_check(parse_oneform(i_form, ctx));
            em.command = "integrable";
            em.inputs["form"] = i_form;
            em.result["integrable"] = r.integrable;
            if (r.witness_indices) {
                em.result["witnessIndices"] = {(*r.witness_indices)[0],
                                               (*r.witness_indices)[1],
                                               (*r.witness_indices)[2]};
                em.result["witness"] = r.witness->to_string();
            }
            em.line(r.integrable ? "integrable" : "not integrable");
        } else if (singular->parsed()) {
            em.format = go.format;
            auto ctx = make_context(go, {g_form});
            auto I = singular_ideal(parse_oneform(g_form, ctx));
            em.command = "singular";
            em.inputs["form"] = g_form;
            em.result["generators"] = gens_json(I);
            for (auto& g : I.generators) em.line(g.to_string());
        } else if (blowup->parsed()) {
            em.format = bo.format;
            auto ctx = make_context(bo, {b_form});
            auto P = parse_point(b_point);
            auto charts = blowup_point_charts(ctx, P);
            if (b_chart < 0 || b_chart >= static_cast<int>(charts.size()))
                throw parse_error("chart index out of range", 0);
            auto t = transform_form(parse_oneform(b_form, ctx),
                                    charts[static_cast<std::size_t>(b_chart)]);
            em.command = "blowup";
            em.inputs["form"] = b_form;
            em.inputs["point"] = point_json(P);
            em.inputs["chart"] = b_chart;
            em.result["chart"] = t.chart.description();
            em.result["raw"] = t.rawForm.to_string();
            em.result["removedFactor"] = t.removedFactor.to_string();
            em.result["exceptionalMultiplicity"] = t.exceptionalMultiplicity;
            em.result["saturated"] = t.saturatedForm.to_string();
            em.result["exceptionalInvariant"] = t.exceptionalInvariant;
            em.line("chart: " + t.chart.description());
            em.line("raw: " + t.rawForm.to_string());
            em.line("factor: " + t.removedFactor.to_string());
            em.line("saturated: " + t.saturatedForm.to_string());
        } else if (resolve->parsed()) {
            em.format = ro.format;
            if (ro.budget > 0) groebner_default_budget() = ro.budget;
            auto ctx = make_context(ro, {r_form});
            require_planar(ctx);
            auto rep = resolve_2d(parse_oneform(r_form, ctx), r_depth);
            em.command = "resolve";
            em.inputs["form"] = r_form;
            em.inputs["maxDepth"] = r_depth;
            em.result["verdict"] = to_string(rep.verdict);
            em.result["blowups"] = rep.blowupsPerformed;
            em.result["tree"] = node_json(rep, 0);
            em.line(report_render(rep));
        } else if (pdic->parsed()) {
            em.format = pdo.format;
            if (pdo.budget > 0) groebner_default_budget() = pdo.budget;
            auto ctx = make_context(pdo, {pd_form});
            require_planar(ctx);
            auto r = dicritical_probe(parse_oneform(pd_form, ctx), pd_depth);
            em.command = "probe dicritical";
            em.inputs["form"] = pd_form;
            em.inputs["maxDepth"] = pd_depth;
            em.result["dicritical"] = r.dicritical;
            em.result["witnessChain"] = r.witnessChain;
            em.result["depthSearched"] = r.depthSearched;
            em.line(r.dicritical ? "dicritical" : "no dicritical divisor found");
            for (auto& c : r.witnessChain) em.line("  " + c);
        } else if (pnc->parsed()) {
            em.format = pno.format;
            if (pno.budget > 0) groebner_default_budget() = pno.budget;
            auto ctx = make_context(pno, {pn_form});
            auto P = parse_point(pn_point);
            auto r = jet_comparison_probe(parse_oneform(pn_form, ctx), pn_t,
                                          pn_order, P);
            em.command = "probe jets-vs-nc";
            em.inputs["form"] = pn_form;
            em.inputs["t"] = pn_t;
            em.inputs["order"] = pn_order;
            em.inputs["point"] = point_json(P);
            em.result["verdict"] = to_string(r.verdict);
            if (r.firstDivergenceOrder)
                em.result["firstDivergenceOrder"] = *r.firstDivergenceOrder;
            if (r.componentsContained) {
                em.result["componentsContained"] = *r.componentsContained;
                em.result["componentsTotal"] = *r.componentsTotal;
            }
            em.line(to_string(r.verdict));
        } else if (ocrit->parsed()) {
            em.format = oco.format;
            auto ctx = make_context(oco, {oc_form, oc_g});
            auto P = parse_point(oc_point);
            auto r = order_criterion_check(parse_oneform(oc_form, ctx),
                                           parse_polynomial(oc_g, ctx), P);
            em.command = "check order-criterion";
            em.inputs["form"] = oc_form;
            em.inputs["g"] = oc_g;
            em.inputs["point"] = point_json(P);
            em.result["holds"] = r.holds;
            if (r.ord_g) em.result["ordG"] = *r.ord_g;
            if (r.min_ord_b) em.result["minOrdB"] = *r.min_ord_b;
            em.result["pointSingular"] = r.point_singular;
            em.line(r.holds ? "holds" : "violated");
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error at position " << e.pos << ": " << e.what()
                  << "\n";
        return 2;
    } catch (const budget_exceeded_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return em.emit();
}
