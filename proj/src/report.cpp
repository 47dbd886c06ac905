#include "tjurina/report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace tjurina {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

class Stopwatch {
  public:
    long elapsed_ms() const { return now_ms() - start_; }

  private:
    long start_ = now_ms();
};

} // namespace

InputDoc parse_input(const std::string& text, const std::string& name) {
    InputDoc doc;
    doc.source_name = name;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int entry_rows_seen = 0;
    bool matrix_seen = false;

    auto fail = [&](const std::string& what) -> void {
        throw Error(Errc::InputError, name + ":" + std::to_string(lineno) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.rfind("vars:", 0) == 0) {
            if (!doc.vars.empty()) fail("duplicate vars line");
            for (auto& v : split(line.substr(5), ','))
                if (!v.empty()) doc.vars.push_back(v);
            if (doc.vars.empty()) fail("vars line declares no variables");
        } else if (line.rfind("defparams:", 0) == 0) {
            for (auto& v : split(line.substr(10), ','))
                if (!v.empty()) doc.defparams.push_back(v);
        } else if (line.rfind("options:", 0) == 0) {
            for (auto& opt : split(line.substr(8), ',')) {
                if (opt.empty()) continue;
                auto eq = opt.find('=');
                if (eq == std::string::npos) doc.options[opt] = "";
                else doc.options[trim(opt.substr(0, eq))] = trim(opt.substr(eq + 1));
            }
        } else if (line.rfind("matrix:", 0) == 0) {
            if (matrix_seen) fail("duplicate matrix line");
            std::string dims = line.substr(7);
            auto x = dims.find('x');
            if (x == std::string::npos) x = dims.find('X');
            if (x == std::string::npos) fail("matrix line must read 'matrix: R x C'");
            try {
                doc.rows = std::stoi(trim(dims.substr(0, x)));
                doc.cols = std::stoi(trim(dims.substr(x + 1)));
            } catch (const std::exception&) {
                fail("bad matrix dimensions");
            }
            if (doc.rows < 1 || doc.cols < 1) fail("matrix dimensions must be positive");
            matrix_seen = true;
        } else {
            if (!matrix_seen) fail("matrix entries before the 'matrix:' line");
            if (entry_rows_seen >= doc.rows) fail("more entry rows than declared");
            auto row = split(line, ',');
            if (static_cast<int>(row.size()) != doc.cols)
                fail("expected " + std::to_string(doc.cols) + " comma-separated entries, got " +
                     std::to_string(row.size()));
            for (auto& e : row) doc.entries.push_back(e);
            ++entry_rows_seen;
        }
    }
    lineno = 0;
    if (doc.vars.empty()) throw Error(Errc::InputError, name + ": missing vars line");
    if (!matrix_seen) throw Error(Errc::InputError, name + ": missing matrix line");
    if (entry_rows_seen != doc.rows)
        throw Error(Errc::InputError, name + ": expected " + std::to_string(doc.rows) +
                                          " entry rows, got " + std::to_string(entry_rows_seen));

    // entries must parse in the declared context (positions surface here)
    doc_matrix(doc);
    return doc;
}

InputDoc load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_input(buf.str(), path);
}

PolyMatrix doc_matrix(const InputDoc& doc) {
    std::vector<std::string> all = doc.vars;
    all.insert(all.end(), doc.defparams.begin(), doc.defparams.end());
    Ctx ctx = RingContext::make({{all, BlockKind::Degrevlex}});
    std::vector<Polynomial> entries;
    for (const auto& e : doc.entries) entries.push_back(parse_polynomial(e, ctx));
    return PolyMatrix(doc.rows, doc.cols, std::move(entries));
}

Presentation doc_presentation(const InputDoc& doc) {
    if (doc.defparams.empty()) return validate_icmc2(doc_matrix(doc));
    return doc_deformed(doc).base;
}

DeformedPresentation doc_deformed(const InputDoc& doc) {
    return make_deformed(doc_matrix(doc), doc.defparams);
}

namespace {

Json input_echo(const InputDoc& doc) {
    Json in;
    in["source"] = doc.source_name;
    in["vars"] = doc.vars;
    in["defparams"] = doc.defparams;
    in["rows"] = doc.rows;
    in["cols"] = doc.cols;
    Json rows = Json::array();
    for (int r = 0; r < doc.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < doc.cols; ++c) row.push_back(doc.entries[r * doc.cols + c]);
        rows.push_back(row);
    }
    in["entries"] = rows;
    Json opts = Json::object();
    for (const auto& [k, v] : doc.options) opts[k] = v;
    in["options"] = opts;
    return in;
}

Json validation_block(const Presentation& p) {
    Json v;
    v["isolated"] = p.isolated;
    v["minor_locus_at_origin"] = p.minor_locus_at_origin;
    return v;
}

Json charts_block(const TransformAnalysis& t) {
    Json charts = Json::array();
    for (const auto& a : t.charts) {
        Json c;
        c["index"] = a.chart.index;
        c["dim"] = a.dim;
        c["points"] = a.point_count;
        c["tau_new"] = a.tau_new;
        charts.push_back(c);
    }
    return charts;
}

} // namespace

Json cmd_validate(const InputDoc& doc) {
    Stopwatch sw;
    Presentation p = doc_presentation(doc);
    Json j;
    j["input"] = input_echo(doc);
    j["t"] = p.t;
    j["validation"] = validation_block(p);
    j["timings_ms"] = sw.elapsed_ms();
    return j;
}

Json cmd_jet(const InputDoc& doc) {
    Stopwatch sw;
    Presentation p = doc_presentation(doc);
    JetClass jc = classify_one_jet(p.matrix);
    Json j;
    j["input"] = input_echo(doc);
    j["t"] = p.t;
    j["jet_class"] = jet_tag_name(jc.tag);
    j["generic_rank"] = jc.generic_rank;
    j["timings_ms"] = sw.elapsed_ms();
    return j;
}

Json cmd_transform(const InputDoc& doc, int chart) {
    Stopwatch sw;
    Presentation p = doc_presentation(doc);
    Json charts = Json::array();
    for (int i = 1; i <= p.t; ++i) {
        if (chart != 0 && chart != i) continue;
        Chart c = transform_chart_equations(p, i);
        Json jc;
        jc["index"] = c.index;
        jc["chart_vars"] = c.svars;
        Json eqs = Json::array();
        for (const auto& h : c.equations) eqs.push_back(h.to_string());
        jc["equations"] = eqs;
        charts.push_back(jc);
    }
    if (charts.empty()) throw Error(Errc::InputError, "chart index out of range");
    Json j;
    j["input"] = input_echo(doc);
    j["t"] = p.t;
    j["charts"] = charts;
    j["timings_ms"] = sw.elapsed_ms();
    return j;
}

Json cmd_sing(const InputDoc& doc) {
    Stopwatch sw;
    Presentation p = doc_presentation(doc);
    Json charts = Json::array();
    long total = 0;
    bool all_isolated = true;
    for (int i = 1; i <= p.t; ++i) {
        ChartAnalysis a = singular_locus_transform(p, i);
        Json jc;
        jc["index"] = a.chart.index;
        jc["dim"] = a.dim;
        jc["isolated"] = a.isolated;
        jc["support_in_exceptional"] = a.support_in_exceptional;
        jc["points"] = a.point_count;
        charts.push_back(jc);
        total += a.point_count;
        all_isolated = all_isolated && a.isolated;
    }
    Json j;
    j["input"] = input_echo(doc);
    j["t"] = p.t;
    j["charts"] = charts;
    j["total_points"] = total;
    j["transform_isolated"] = all_isolated;
    j["timings_ms"] = sw.elapsed_ms();
    return j;
}

Json cmd_tau(const InputDoc& doc, bool upstairs, bool downstairs) {
    Stopwatch sw;
    if (!upstairs && !downstairs) upstairs = downstairs = true;
    Presentation p = doc_presentation(doc);
    Json j;
    j["input"] = input_echo(doc);
    j["t"] = p.t;
    if (downstairs) j["tau_down"] = t1_downstairs(p).tau;
    if (upstairs) {
        TransformAnalysis t = tau_upstairs(p);
        j["tau_up"] = t.tau_upstairs;
        j["charts"] = charts_block(t);
    }
    j["timings_ms"] = sw.elapsed_ms();
    return j;
}

Json cmd_flatness(const InputDoc& doc) {
    Stopwatch sw;
    DeformedPresentation dp = doc_deformed(doc);
    FlatnessVerdict v = flatness_check(dp);
    Json j;
    j["input"] = input_echo(doc);
    j["t"] = dp.base.t;
    j["status"] = flat_status_name(v.status);
    if (v.witness) j["witness"] = v.witness->to_string();
    j["notes"] = v.notes;
    j["timings_ms"] = sw.elapsed_ms();
    return j;
}

Json cmd_fiber(const InputDoc& doc, const std::vector<Rat>& at) {
    Stopwatch sw;
    DeformedPresentation dp = doc_deformed(doc);
    FiberResult f = fiber_smoothness(dp, at);
    Json j;
    j["input"] = input_echo(doc);
    j["t"] = dp.base.t;
    Json vals = Json::array();
    for (const auto& q : at) vals.push_back(rat_to_string(q));
    j["at"] = vals;
    j["status"] = f.smooth ? "SMOOTH" : "SINGULAR";
    if (f.point_count) j["singular_points"] = *f.point_count;
    j["timings_ms"] = sw.elapsed_ms();
    return j;
}

Json cmd_report(const InputDoc& doc) {
    Stopwatch sw;
    Presentation p = doc_presentation(doc);
    bool assume_ade = !doc.has_option("no-ade-assumption");

    long tau_down = t1_downstairs(p).tau;
    TransformAnalysis t = tau_upstairs(p);
    BettiReport betti = betti_report_from(p, t, assume_ade);
    long h1 = h1_tangent(tau_down, t.tau_upstairs);

    Json j;
    j["input"] = input_echo(doc);
    j["t"] = p.t;
    j["validation"] = validation_block(p);
    j["charts"] = charts_block(t);
    j["tau_down"] = tau_down;
    j["tau_up"] = t.tau_upstairs;
    j["h1"] = h1;
    Json b = Json::array();
    b.push_back(betti.b0);
    b.push_back(betti.b1);
    b.push_back(betti.b2);
    if (betti.b3) b.push_back(*betti.b3);
    else b.push_back(nullptr);
    j["betti"] = b;
    Json flags;
    flags["ade_quasihomogeneous_assumed"] = betti.ade_quasihomogeneous_assumed;
    flags["experimental_t3"] = betti.experimental_t3;
    flags["note"] = betti.note;
    j["flags"] = flags;
    j["timings_ms"] = sw.elapsed_ms();
    return j;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

void render_plain(std::ostringstream& os, const Json& j, int indent) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (k == "input") continue; // echo clutters the text view
            if (v.is_object() || v.is_array()) {
                os << pad << k << ":\n";
                render_plain(os, v, indent + 2);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                os << pad << "-\n";
                render_plain(os, v, indent + 2);
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    }
}

} // namespace

std::string render_text(const std::string& command, const Json& j) {
    std::ostringstream os;
    os << command << " " << j.value("input", Json::object()).value("source", "") << "\n";
    render_plain(os, j, 2);
    return os.str();
}

} // namespace tjurina
