#pragma once

// Stable JSON and CSV shapes for certificates, bound reports, Weyl-kernel
// reports and the AGL1 statistics.  Field order is fixed so identical runs
// produce byte-identical output; group orders are rendered as decimal
// strings, fractions as numerator/denominator pairs.

#include <json.hpp>

#include <string>
#include <vector>

#include "edtool/agl1.hpp"
#include "edtool/edbounds.hpp"
#include "edtool/genfree.hpp"
#include "edtool/weyl.hpp"

namespace edt::serialize {

using Json = nlohmann::ordered_json;

inline Json certificate_json(const genfree::Certificate& c) {
    Json j;
    j["id"] = c.id;
    j["target"] = c.target;
    j["projective"] = c.projective;
    j["verdict"] = genfree::to_string(c.verdict);
    j["strategy"] = c.strategy;
    Json torus;
    torus["faithful"] = c.torus_faithful;
    if (c.torus_kernel_order)
        torus["kernel_order"] = c.torus_kernel_order->get_str();
    else
        torus["kernel_order"] = nullptr;
    j["torus"] = torus;
    j["kernel_rank"] = c.kernel_rank;
    if (c.bound)
        j["bound"] = *c.bound;
    else
        j["bound"] = nullptr;
    j["checked_elements"] = c.checked_elements.get_str();
    if (c.strategy == "monte-carlo") {
        j["seed"] = c.seed;
        j["trials"] = c.trials;
    }
    Json ws = Json::array();
    for (const auto& w : c.witnesses) {
        Json jw;
        jw["kind"] = w.kind;
        jw["detail"] = w.detail;
        jw["vectors"] = w.vectors;
        ws.push_back(jw);
    }
    j["witnesses"] = ws;
    j["provenance"] = c.provenance;
    return j;
}

inline Json bound_report_json(const edbounds::BoundReport& r) {
    Json j;
    j["group"] = r.group.display;
    j["char"] = r.group.characteristic;
    j["kind"] = edbounds::to_string(r.kind);
    j["value"] = r.value;
    Json prov = Json::array();
    for (const auto& s : r.provenance) {
        Json js;
        js["rule"] = s.rule;
        js["anchor"] = s.anchor;
        Json inputs;
        for (const auto& [k, v] : s.inputs) inputs[k] = v;
        js["inputs"] = inputs;
        js["output"] = s.output;
        prov.push_back(js);
    }
    j["provenance"] = prov;
    j["certificates"] = r.certificate_refs;
    j["external"] = r.external;
    if (!r.group.note.empty()) j["note"] = r.group.note;
    return j;
}

inline std::string csv_escape(const std::string& s) {
    bool need = s.find_first_of(",\"\n") != std::string::npos;
    if (!need) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

inline std::string bound_reports_csv(const std::vector<edbounds::BoundReport>& rows) {
    std::string out = "group,char,kind,value,rule,anchor,certificates\n";
    for (const auto& r : rows) {
        std::string rule, anchor;
        if (!r.provenance.empty()) {
            rule = r.provenance.back().rule;
            anchor = r.provenance.back().anchor;
        }
        std::string certs;
        for (const auto& c : r.certificate_refs) certs += (certs.empty() ? "" : ";") + c;
        out += csv_escape(r.group.display) + "," + std::to_string(r.group.characteristic) + "," +
               edbounds::to_string(r.kind) + "," + std::to_string(r.value) + "," +
               csv_escape(rule) + "," + csv_escape(anchor) + "," + csv_escape(certs) + "\n";
    }
    return out;
}

inline Json agl1_report_json(const genfree::Agl1Report& r) {
    Json j;
    j["n"] = r.n;
    j["q"] = r.q;
    j["p"] = r.p;
    j["field_degree"] = r.field_degree;
    j["translations_allowed"] = r.translations_allowed;
    j["samples"] = r.samples;
    j["trivial_count"] = r.trivial_count;
    Json frac;
    frac["num"] = r.fraction_num();
    frac["den"] = r.fraction_den();
    j["trivial_fraction"] = frac;
    j["degenerate_case"] = r.degenerate_case;
    j["seed"] = r.seed;
    return j;
}

inline Json kernel_json(const weyl::GroupHandle& k) {
    Json j;
    j["order"] = k.order.get_str();
    j["elementary_abelian_2"] = k.elementary_abelian_2;
    j["structure"] = weyl::abelian_2_structure(k);
    j["generator_count"] = k.generators.size();
    return j;
}

inline Json adjoint_report_json(const edbounds::AdjointStabilizerReport& r) {
    Json j;
    j["group"] = r.group.display;
    j["char"] = r.group.characteristic;
    j["connected"] = r.connected;
    j["component_group"] = r.component_group;
    j["inversion_action"] = r.inversion_action;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace edt::serialize
