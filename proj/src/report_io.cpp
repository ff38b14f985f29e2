#include "blowup/report_io.hpp"

#include <json.hpp>

#include <sstream>

namespace blowup {

namespace {

using json = nlohmann::ordered_json;

json window_json(const Window& w) {
    return json{{"umax", w.umax}, {"zmin", w.zmin}, {"zmax", w.zmax}};
}

json report_obj(const InvariantReport& r) {
    json inv;
    if (r.m)
        inv["m"] = *r.m;
    else
        inv["m"] = "SPLIT";
    inv["lR1"] = json{{"formula", r.lr1_formula}, {"oracle", r.lr1_oracle}};
    inv["lQ"] = r.lq_oracle;
    inv["charge"] = r.charge;
    json h1e;
    if (r.h1end_formula)
        h1e["formula"] = *r.h1end_formula;
    else
        h1e["formula"] = nullptr;
    h1e["oracle"] = r.h1end_oracle;
    inv["h1End"] = h1e;

    json bounds;
    bounds["lR1_lower"] = r.bounds.lr1_lower;
    bounds["lR1_upper"] = r.bounds.lr1_upper;
    bounds["lQ_lower"] = r.bounds.lq_lower;
    bounds["lQ_lower_severity"] = "paper-claimed";
    bounds["lQ_upper"] = r.bounds.lq_upper;
    bounds["charge_lower"] = r.bounds.charge_lower;
    bounds["charge_upper"] = r.bounds.charge_upper;
    bounds["all_pass"] = r.bounds.all_pass();

    json o;
    o["schema_version"] = 1;
    o["input"] = json{{"j", r.j}, {"p", r.p_text}};
    o["invariants"] = inv;
    o["bounds"] = bounds;
    o["stabilization"] =
        json{{"windows", window_json(r.r1_window)}, {"degree_cap", r.degree_cap},
             {"stabilized", r.stabilized}};
    o["crosscheck"] = json{{"ok", r.crosscheck_ok}, {"mismatch", r.mismatch}};
    return o;
}

std::string opt_ext_text(const std::optional<ExtensionClass>& e) {
    return e ? e->p.to_string() : std::string();
}

}  // namespace

std::string report_json(const InvariantReport& r) { return report_obj(r).dump(2) + "\n"; }

std::string report_table(const InvariantReport& r) {
    std::ostringstream o;
    o << "bundle (j, p) = (" << r.j << ", " << r.p_text << ")\n";
    o << "  m          : " << (r.m ? std::to_string(*r.m) : std::string("SPLIT")) << "\n";
    o << "  l(R1)      : oracle " << r.lr1_oracle << ", formula " << r.lr1_formula << "\n";
    o << "  l(Q)       : " << r.lq_oracle << "\n";
    o << "  charge     : " << r.charge << "\n";
    o << "  h1(End)    : oracle " << r.h1end_oracle << ", formula "
      << (r.h1end_formula ? std::to_string(*r.h1end_formula) : std::string("-")) << "\n";
    o << "  bounds     : " << (r.bounds.all_pass() ? "all pass" : "violation")
      << (r.bounds.lq_lower ? "" : " [lQ lower bound (paper-claimed) fails]") << "\n";
    o << "  stabilized : " << (r.stabilized ? "yes" : "no") << " (window umax=" << r.r1_window.umax
      << " z=[" << r.r1_window.zmin << "," << r.r1_window.zmax << "], degree cap "
      << r.degree_cap << ")\n";
    if (!r.crosscheck_ok) o << "  MISMATCH   : " << r.mismatch << "\n";
    return o.str();
}

std::string verify_json(const VerifyOutcome& o) {
    json j;
    j["schema_version"] = 1;
    j["options"] = json{{"jmax", o.opts.jmax},
                        {"samples", o.opts.samples},
                        {"seed", o.opts.seed},
                        {"robust", o.opts.robust}};
    j["summary"] = json{{"checked", o.checked}, {"failed", o.failed}, {"all_ok", o.all_ok}};
    json sweep = json::array();
    for (const auto& c : o.sweep) {
        json e;
        e["j"] = c.j;
        e["p"] = c.p_text;
        e["kind"] = c.canonical ? "canonical" : "random";
        e["m"] = c.m;
        e["lR1"] = json{{"oracle", c.lr1_oracle}, {"formula", c.lr1_formula}, {"ok", c.lr1_ok}};
        e["h1End"] =
            json{{"oracle", c.h1end_oracle}, {"formula", c.h1end_formula}, {"ok", c.h1end_ok}};
        e["robust_ok"] = c.robust_ok;
        e["error"] = c.error;
        sweep.push_back(std::move(e));
    }
    j["sweep"] = std::move(sweep);
    json splits = json::array();
    for (const auto& s : o.splits) {
        splits.push_back(json{{"j", s.j},
                              {"lR1", s.lr1},
                              {"lQ", s.lq},
                              {"charge", s.charge},
                              {"ok", s.ok},
                              {"robust_ok", s.robust_ok},
                              {"error", s.error}});
    }
    j["splits"] = std::move(splits);
    json sharp = json::array();
    for (const auto& s : o.sharpness) {
        sharp.push_back(
            json{{"j", s.j}, {"p", s.p_text}, {"charge", s.charge}, {"ok", s.ok}, {"error", s.error}});
    }
    j["sharpness"] = std::move(sharp);
    return j.dump(2) + "\n";
}

std::string verify_table(const VerifyOutcome& o) {
    std::ostringstream s;
    s << "verify sweep: jmax=" << o.opts.jmax << " samples=" << o.opts.samples
      << " seed=" << o.opts.seed << (o.opts.robust ? " (robust)" : "") << "\n";
    long lr1_bad = 0, h1e_bad = 0, rob_bad = 0, err = 0;
    for (const auto& c : o.sweep) {
        if (!c.error.empty()) ++err;
        if (!c.lr1_ok) ++lr1_bad;
        if (!c.h1end_ok) ++h1e_bad;
        if (!c.robust_ok) ++rob_bad;
    }
    s << "  sweep cases     : " << o.sweep.size() << " (lR1 mismatches " << lr1_bad
      << ", h1End mismatches " << h1e_bad << ", robustness failures " << rob_bad << ", errors "
      << err << ")\n";
    for (const auto& sp : o.splits)
        s << "  split j=" << sp.j << "      : lR1=" << sp.lr1 << " lQ=" << sp.lq
          << " charge=" << sp.charge << (sp.ok ? " ok" : " FAIL")
          << (sp.error.empty() ? "" : (" [" + sp.error + "]")) << "\n";
    for (const auto& sh : o.sharpness)
        s << "  sharpness j=" << sh.j << "  : charge(" << sh.p_text << ")=" << sh.charge
          << (sh.ok ? " ok" : " FAIL") << "\n";
    s << (o.all_ok ? "all checks passed" : "FAILURES: " + std::to_string(o.failed)) << "\n";
    return s.str();
}

std::string spectrum_json(const SpectrumResult& sp) {
    json j;
    j["schema_version"] = 1;
    j["j"] = sp.j;
    j["candidates_tried"] = sp.candidates_tried;
    json rows = json::array();
    for (const auto& [k, w] : sp.witnesses) {
        json e;
        e["charge"] = k;
        if (w)
            e["witness_p"] = w->p.to_string();
        else
            e["witness_p"] = nullptr;
        rows.push_back(std::move(e));
    }
    j["spectrum"] = std::move(rows);
    json miss = json::array();
    for (long k : sp.missing) miss.push_back(k);
    j["missing"] = std::move(miss);
    return j.dump(2) + "\n";
}

std::string spectrum_table(const SpectrumResult& sp) {
    std::ostringstream s;
    s << "charge spectrum for j=" << sp.j << " (candidates tried: " << sp.candidates_tried
      << ")\n";
    for (const auto& [k, w] : sp.witnesses)
        s << "  charge " << k << " : " << (w ? w->p.to_string() : "not found within budget")
          << "\n";
    return s.str();
}

std::string strata_json(const StrataTable& t) {
    json j;
    j["schema_version"] = 1;
    j["j"] = t.j;
    j["candidates_tried"] = t.candidates_tried;
    json cells = json::array();
    for (const auto& [key, cell] : t.cells) {
        cells.push_back(json{{"w", key.first},
                             {"h", key.second},
                             {"charge", cell.charge},
                             {"witness_p", opt_ext_text(cell.witness)}});
    }
    j["cells"] = std::move(cells);
    json miss = json::array();
    for (const auto& [w, h] : t.missing_cells) miss.push_back(json{{"w", w}, {"h", h}});
    j["missing_cells"] = std::move(miss);
    json outside = json::array();
    for (const auto& [key, e] : t.outside_box)
        outside.push_back(json{{"w", key.first}, {"h", key.second}, {"p", e.p.to_string()}});
    j["outside_box"] = std::move(outside);
    return j.dump(2) + "\n";
}

std::string strata_csv(const StrataTable& t) {
    std::ostringstream s;
    s << "w,h,charge,witness_p\n";
    for (const auto& [key, cell] : t.cells) {
        std::string p = opt_ext_text(cell.witness);
        s << key.first << "," << key.second << "," << cell.charge << ",\"" << p << "\"\n";
    }
    return s.str();
}

std::string strata_table(const StrataTable& t) {
    std::ostringstream s;
    s << "strata box for j=" << t.j << " (candidates tried: " << t.candidates_tried << ")\n";
    s << "  (w, h) -> witness\n";
    for (const auto& [key, cell] : t.cells)
        s << "  (" << key.first << ", " << key.second << ") charge=" << cell.charge << " : "
          << opt_ext_text(cell.witness) << "\n";
    for (const auto& [w, h] : t.missing_cells)
        s << "  (" << w << ", " << h << ") : not found within budget\n";
    if (!t.outside_box.empty()) {
        s << "  observed outside paper box:\n";
        for (const auto& [key, e] : t.outside_box)
            s << "  (" << key.first << ", " << key.second << ") : " << e.p.to_string() << "\n";
    }
    return s.str();
}

}  // namespace blowup
