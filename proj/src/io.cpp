// io.cpp -- JSON schemas and report documents.

#include "markovmm/io.hpp"

#include "markovmm/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace markovmm {

namespace {

void reject_unknown_fields(const Json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key())) {
            throw Error(Errc::bad_input, "unknown field '" + item.key() + "' in " + where);
        }
    }
}

const Json& require_field(const Json& obj, const std::string& key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw Error(Errc::bad_input, "missing field '" + key + "' in " + where);
    }
    return *it;
}

Rat rat_from_json(const Json& v, const std::string& where) {
    if (!v.is_string()) {
        throw Error(Errc::malformed_rational, where + " must be a \"p/q\" string");
    }
    return parse_rat(v.get<std::string>());
}

IntervalQ interval_from_json(const Json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2) {
        throw Error(Errc::bad_input, where + " must be a [lo, hi] pair");
    }
    IntervalQ iv{rat_from_json(v[0], where + "[0]"), rat_from_json(v[1], where + "[1]"), true};
    if (iv.lo > iv.hi) throw Error(Errc::bad_input, where + " has lo > hi");
    return iv;
}

Json word_to_json(const AdjacencyMatrix& m, const std::vector<int>& word) {
    Json out = Json::array();
    for (int s : word) out.push_back(m.alphabet[s]);
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

MarkovMultiMap multimap_from_json(const Json& doc) {
    if (!doc.is_object()) throw Error(Errc::bad_input, "multi-map document must be an object");
    reject_unknown_fields(doc, {"ambient", "partition", "symbols"}, "multi-map document");
    MarkovMultiMap m;
    m.ambient = interval_from_json(require_field(doc, "ambient", "document"), "ambient");
    const Json& partition = require_field(doc, "partition", "document");
    if (!partition.is_array()) throw Error(Errc::bad_input, "partition must be an array");
    for (std::size_t i = 0; i < partition.size(); ++i) {
        m.partition.push_back(rat_from_json(partition[i], "partition[" + std::to_string(i) + "]"));
    }
    const Json& symbols = require_field(doc, "symbols", "document");
    if (!symbols.is_array()) throw Error(Errc::bad_input, "symbols must be an array");
    for (const Json& js : symbols) {
        if (!js.is_object()) throw Error(Errc::bad_input, "symbol entries must be objects");
        reject_unknown_fields(js, {"id", "class", "D", "R", "branch"}, "symbol");
        Symbol s;
        const Json& id = require_field(js, "id", "symbol");
        if (!id.is_string()) throw Error(Errc::bad_input, "symbol id must be a string");
        s.id = id.get<std::string>();
        const Json& cls = require_field(js, "class", "symbol '" + s.id + "'");
        const std::string cls_name = cls.is_string() ? cls.get<std::string>() : "";
        if (cls_name == "A0") s.cls = SymbolClass::A0;
        else if (cls_name == "A1") s.cls = SymbolClass::A1;
        else if (cls_name == "A2") s.cls = SymbolClass::A2;
        else throw Error(Errc::bad_input, "symbol '" + s.id + "' class must be A0, A1, or A2");
        s.domain = interval_from_json(require_field(js, "D", "symbol '" + s.id + "'"), "D");
        s.range = interval_from_json(require_field(js, "R", "symbol '" + s.id + "'"), "R");
        if (js.contains("branch")) {
            const Json& jb = js["branch"];
            if (!jb.is_object()) throw Error(Errc::bad_input, "branch must be an object");
            const Json& kind = require_field(jb, "kind", "branch of '" + s.id + "'");
            const std::string kind_name = kind.is_string() ? kind.get<std::string>() : "";
            BranchMap b;
            if (kind_name == "affine") {
                reject_unknown_fields(jb, {"kind", "slope", "intercept"}, "affine branch");
                b.kind = BranchMap::Kind::affine;
                b.slope = rat_from_json(require_field(jb, "slope", "branch"), "slope");
                b.intercept = rat_from_json(require_field(jb, "intercept", "branch"), "intercept");
            } else if (kind_name == "monomial") {
                reject_unknown_fields(jb, {"kind", "power", "increasing"}, "monomial branch");
                b.kind = BranchMap::Kind::monomial;
                const Json& power = require_field(jb, "power", "branch");
                if (!power.is_number_unsigned() || power.get<unsigned>() < 2) {
                    throw Error(Errc::bad_input, "monomial power must be an integer >= 2");
                }
                b.power = power.get<unsigned>();
                const Json& inc = require_field(jb, "increasing", "branch");
                if (!inc.is_boolean()) {
                    throw Error(Errc::bad_input, "monomial 'increasing' must be a boolean");
                }
                b.increasing = inc.get<bool>();
            } else {
                throw Error(Errc::bad_input, "branch kind must be affine or monomial");
            }
            s.branch = b;
        }
        m.symbols.push_back(std::move(s));
    }
    return m;
}

Json multimap_to_json(const MarkovMultiMap& m) {
    Json doc;
    doc["ambient"] = Json::array({format_rat(m.ambient.lo), format_rat(m.ambient.hi)});
    Json partition = Json::array();
    for (const Rat& p : m.partition) partition.push_back(format_rat(p));
    doc["partition"] = std::move(partition);
    Json symbols = Json::array();
    for (const Symbol& s : m.symbols) {
        Json js;
        js["id"] = s.id;
        js["class"] = symbol_class_name(s.cls);
        js["D"] = Json::array({format_rat(s.domain.lo), format_rat(s.domain.hi)});
        js["R"] = Json::array({format_rat(s.range.lo), format_rat(s.range.hi)});
        if (s.branch) {
            Json jb;
            if (s.branch->kind == BranchMap::Kind::affine) {
                jb["kind"] = "affine";
                jb["slope"] = format_rat(s.branch->slope);
                jb["intercept"] = format_rat(s.branch->intercept);
            } else {
                jb["kind"] = "monomial";
                jb["power"] = s.branch->power;
                jb["increasing"] = s.branch->increasing;
            }
            js["branch"] = std::move(jb);
        }
        symbols.push_back(std::move(js));
    }
    doc["symbols"] = std::move(symbols);
    return doc;
}

AdjacencyMatrix matrix_from_json(const Json& doc) {
    if (!doc.is_object()) throw Error(Errc::bad_input, "matrix document must be an object");
    reject_unknown_fields(doc, {"alphabet", "rows"}, "matrix document");
    AdjacencyMatrix m;
    const Json& alphabet = require_field(doc, "alphabet", "matrix document");
    if (!alphabet.is_array()) throw Error(Errc::bad_input, "alphabet must be an array");
    for (const Json& ja : alphabet) {
        if (!ja.is_string()) throw Error(Errc::bad_input, "alphabet entries must be strings");
        m.alphabet.push_back(ja.get<std::string>());
    }
    const Json& rows = require_field(doc, "rows", "matrix document");
    if (!rows.is_array() || rows.size() != m.alphabet.size()) {
        throw Error(Errc::bad_input, "rows must be an array with one row per alphabet symbol");
    }
    for (const Json& jr : rows) {
        if (!jr.is_array() || jr.size() != m.alphabet.size()) {
            throw Error(Errc::bad_input, "each row must have one entry per alphabet symbol");
        }
        std::vector<std::uint8_t> row;
        for (const Json& v : jr) {
            if (!v.is_number_integer() ||
                (v.get<std::int64_t>() != 0 && v.get<std::int64_t>() != 1)) {
                throw Error(Errc::bad_input, "matrix entries must be 0 or 1");
            }
            row.push_back(static_cast<std::uint8_t>(v.get<std::int64_t>()));
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

Json matrix_to_json(const AdjacencyMatrix& m) {
    Json doc;
    doc["alphabet"] = m.alphabet;
    Json rows = Json::array();
    for (const auto& row : m.rows) {
        Json jr = Json::array();
        for (std::uint8_t v : row) jr.push_back(static_cast<int>(v));
        rows.push_back(std::move(jr));
    }
    doc["rows"] = std::move(rows);
    return doc;
}

std::vector<Rat> trajectory_from_json(const Json& doc) {
    if (!doc.is_array()) throw Error(Errc::bad_input, "trajectory document must be an array");
    std::vector<Rat> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        out.push_back(rat_from_json(doc[i], "trajectory[" + std::to_string(i) + "]"));
    }
    return out;
}

Json trajectory_to_json(const std::vector<Rat>& points) {
    Json out = Json::array();
    for (const Rat& p : points) out.push_back(format_rat(p));
    return out;
}

Json parse_json_text(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw Error(Errc::bad_input, "invalid JSON");
    return doc;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::bad_input, "cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

Json violations_to_json(const std::vector<Violation>& violations) {
    Json out;
    out["valid"] = violations.empty();
    Json list = Json::array();
    for (const Violation& v : violations) {
        Json jv;
        jv["condition"] = v.condition;
        jv["symbol"] = v.symbol;
        jv["detail"] = v.detail;
        list.push_back(std::move(jv));
    }
    out["violations"] = std::move(list);
    return out;
}

Json interval_to_json(const IntervalQ& iv) {
    Json out;
    out["lo"] = format_rat(iv.lo);
    out["hi"] = format_rat(iv.hi);
    out["exact"] = iv.exact;
    return out;
}

Json decomposition_to_json(const AdjacencyMatrix& matrix, const Decomposition& d) {
    Json out;
    Json components = Json::array();
    for (const Component& c : d.components) {
        Json jc;
        jc["type"] = component_kind_name(c.kind);
        Json ids = Json::array();
        for (int v : c.symbols) ids.push_back(matrix.alphabet[v]);
        jc["symbols"] = std::move(ids);
        jc["positive_entropy"] = positive_entropy(matrix, c.symbols);
        components.push_back(std::move(jc));
    }
    out["components"] = std::move(components);
    Json wandering = Json::array();
    for (int v : d.wandering) wandering.push_back(matrix.alphabet[v]);
    out["wandering"] = std::move(wandering);
    return out;
}

Json entropy_to_json(const EntropyResult& r, bool log2_display) {
    Json out;
    out["entropy"] = format_double(r.value);
    if (log2_display) out["entropy_log2"] = format_double(r.value / std::log(2.0));
    out["tolerance"] = format_double(r.tol);
    out["residual"] = format_double(r.residual);
    out["iterations"] = r.iterations;
    return out;
}

Json certificate_to_json(const AdjacencyMatrix& m, const WordCertificate& cert) {
    Json out;
    out["kind"] = cert.kind == WordCertificate::Kind::coding ? "coding" : "avoiding";
    out["rule"] = certificate_rule_name(cert.rule);
    out["word"] = word_to_json(m, cert.word);
    if (cert.interval) out["interval"] = interval_to_json(*cert.interval);
    if (cert.product) out["product"] = format_rat(*cert.product);
    if (cert.blanket_n) out["expansion_depth"] = *cert.blanket_n;
    return out;
}

Json expansion_to_json(const ExpansionReport& r) {
    Json out;
    out["uniformly_expanding"] = r.uniformly_expanding;
    out["n"] = r.n;
    if (r.max_product) out["max_product"] = format_rat(*r.max_product);
    else out["max_product"] = "unbounded";
    return out;
}

Json decay_to_json(const DecayReport& r) {
    Json out;
    Json rows = Json::array();
    for (const Rat& v : r.max_lengths) rows.push_back(format_rat(v));
    out["max_lengths"] = std::move(rows);
    out["exact"] = r.exact;
    out["verdict"] = decay_verdict_name(r.verdict);
    return out;
}

Json class_f_verdict_to_json(const AdjacencyMatrix& m, const ClassFVerdict& v) {
    Json out;
    out["status"] = class_f_status_name(v.status);
    out["properly_parametrized"] = tri_state_name(v.properly_parametrized);
    out["positive_entropy"] = v.positive_entropy;
    out["coding_depth"] = v.coding_depth;
    out["avoiding_depth"] = v.avoiding_depth;
    if (!v.refutation.empty()) out["refutation"] = v.refutation;
    Json findings = Json::array();
    for (const ComponentFinding& f : v.findings) {
        Json jf;
        jf["type"] = component_kind_name(f.component.kind);
        Json ids = Json::array();
        for (int s : f.component.symbols) ids.push_back(m.alphabet[s]);
        jf["symbols"] = std::move(ids);
        jf["positive_entropy"] = f.positive;
        jf["entropy"] = format_double(f.entropy_value);
        if (f.coding) jf["coding"] = certificate_to_json(m, *f.coding);
        else if (f.positive) jf["coding"] = nullptr;
        if (f.needs_avoiding) {
            if (f.avoiding) jf["avoiding"] = certificate_to_json(m, *f.avoiding);
            else jf["avoiding"] = nullptr;
        }
        if (f.decay) jf["decay"] = decay_to_json(*f.decay);
        findings.push_back(std::move(jf));
    }
    out["components"] = std::move(findings);
    return out;
}

Json crossing_to_json(const std::optional<CrossingWitness>& w) {
    Json out;
    out["no_crossing"] = !w.has_value();
    if (w) {
        Json jw;
        jw["a"] = w->a;
        jw["b"] = w->b;
        jw["at"] = Json::array({format_rat(w->at.x), format_rat(w->at.y)});
        out["witness"] = std::move(jw);
    }
    return out;
}

Json proper_param_to_json(const ProperParamReport& r) {
    Json out;
    out["properly_parametrized"] = r.ok;
    Json overlaps = Json::array();
    for (const OpenOverlap& o : r.overlaps) {
        Json jo;
        jo["a"] = o.a;
        jo["b"] = o.b;
        jo["at"] = Json::array({format_rat(o.at.x), format_rat(o.at.y)});
        overlaps.push_back(std::move(jo));
    }
    out["open_overlaps"] = std::move(overlaps);
    Json issues = Json::array();
    for (const BoundaryIssue& b : r.boundary_issues) {
        Json jb;
        jb["of_symbol"] = b.of_symbol;
        jb["at"] = Json::array({format_rat(b.at.x), format_rat(b.at.y)});
        jb["covered_by"] = b.covered_by;
        issues.push_back(std::move(jb));
    }
    out["boundary_issues"] = std::move(issues);
    return out;
}

Json realization_to_json(const RealizationOutput& out) {
    Json doc;
    doc["multimap"] = multimap_to_json(out.multimap);
    doc["permutation"] = out.permutation;
    doc["k"] = out.k;
    Json provenance;
    for (const auto& [id, role] : out.provenance) provenance[id] = role;
    doc["provenance"] = std::move(provenance);
    doc["c0_symbols"] = out.c0_ids;
    return doc;
}

Json realization_report_to_json(const AdjacencyMatrix& m, const RealizationReport& r) {
    Json out;
    out["input_entropy"] = format_double(r.input_entropy);
    out["output_sft_entropy"] = format_double(r.output_sft_entropy);
    out["c0_component_entropy"] = format_double(r.c0_component_entropy);
    out["class_f"] = class_f_verdict_to_json(m, r.class_f_verdict);
    Json segments = Json::array();
    for (const GraphPrimitive& g : r.figure_segments) {
        Json js;
        js["symbol"] = g.symbol;
        js["from"] = Json::array({format_rat(g.a.x), format_rat(g.a.y)});
        js["to"] = Json::array({format_rat(g.b.x), format_rat(g.b.y)});
        segments.push_back(std::move(js));
    }
    out["figure_segments"] = std::move(segments);
    return out;
}

Json label_check_to_json(const LabelCheck& c) {
    Json out;
    out["admissible"] = c.admissible;
    out["in_T"] = c.in_t;
    out["in_S"] = c.in_s;
    return out;
}

}  // namespace markovmm
