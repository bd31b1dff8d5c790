#include "pbdiag/io.hpp"

#include <algorithm>
#include <sstream>

namespace pbdiag {

namespace {

int get_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw DomainError(std::string("expected integer field \"") + key + "\"");
    return j.at(key).get<int>();
}

Rational get_coeff(const Json& t) {
    if (!t.contains("coeff")) throw DomainError("term without \"coeff\"");
    const Json& c = t.at("coeff");
    if (c.is_string()) return rational_from_string(c.get<std::string>());
    if (c.is_number_integer()) return Rational(c.get<long>());
    throw DomainError("coefficient must be a \"p/q\" string or an integer");
}

const Json& get_terms(const Json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        throw DomainError("expected an object with a \"terms\" array");
    return j.at("terms");
}

template <class C>
Json combo_json(const C& x) {
    Json terms = Json::array();
    for (const auto& [d, c] : x.terms) terms.push_back(Json{{"coeff", rational_to_string(c)}, {"diagram", to_json(d)}});
    return Json{{"terms", terms}};
}

template <class C>
C combo_from(const Json& j) {
    C out;
    for (const auto& t : get_terms(j)) {
        if (!t.contains("diagram")) throw DomainError("term without \"diagram\"");
        const Rational c = get_coeff(t);
        if (auto canon = canonicalize(diagram_from_json(t.at("diagram")))) out.add(canon->key, c * canon->sign);
    }
    return out;
}

template <class C>
Json word_json(const C& x, const char* side) {
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms) {
        Json word = Json::array();
        for (const auto& d : w) word.push_back(to_json(d));
        terms.push_back(Json{{"coeff", rational_to_string(c)}, {"word", word}});
    }
    return Json{{"side", side}, {"terms", terms}};
}

template <class C, class Make>
C word_from(const Json& j, const char* side, Make make) {
    if (j.contains("side") && j.at("side") != side)
        throw DomainError(std::string("expected \"side\":\"") + side + "\"");
    C out;
    for (const auto& t : get_terms(j)) {
        if (!t.contains("word") || !t.at("word").is_array()) throw DomainError("term without \"word\" array");
        BarWord w;
        for (const auto& d : t.at("word")) w.push_back(diagram_from_json(d));
        out.add(make(w, get_coeff(t)));
    }
    return out;
}

template <class C>
std::string combo_text(const C& x) {
    if (x.is_zero()) return "0\n";
    std::ostringstream os;
    for (const auto& [k, c] : x.terms) os << rational_to_string(c) << "\t" << to_text(k) << "\n";
    return os.str();
}

}  // namespace

Json to_json(const Diagram& d) {
    Json edges = Json::array();
    for (const auto& [t, h] : d.edges) edges.push_back(Json{{"t", t}, {"h", h}});
    return Json{{"m", d.ctx.m},
                {"n", d.ctx.n},
                {"quotient", quotient_name(d.ctx.quotient)},
                {"free", d.v},
                {"edges", edges}};
}

Diagram diagram_from_json(const Json& j) {
    if (!j.is_object()) throw DomainError("diagram must be a JSON object");
    Context ctx{get_int(j, "m"), get_int(j, "n"), Quotient::Dbar};
    if (j.contains("quotient")) {
        if (!j.at("quotient").is_string()) throw DomainError("\"quotient\" must be a string");
        ctx.quotient = quotient_from_name(j.at("quotient").get<std::string>());
    }
    if (ctx.m < 1 || ctx.n < 3) throw DomainError("diagram needs m >= 1 and n >= 3");
    const int declared = j.contains("free") ? get_int(j, "free") : -1;
    if (!j.contains("edges") || !j.at("edges").is_array()) throw DomainError("diagram without \"edges\" array");
    std::vector<Edge> edges;
    std::vector<int> labels;
    for (const auto& e : j.at("edges")) {
        const int t = get_int(e, "t"), h = get_int(e, "h");
        if (t < 1 || h < 1) throw DomainError("vertex labels must be positive");
        if (!ctx.odd() && t >= h) throw DomainError("even n requires t < h in every edge");
        edges.emplace_back(t, h);
        for (int x : {t, h})
            if (x > ctx.m) labels.push_back(x);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    const int v = static_cast<int>(labels.size());
    if (declared >= 0 && declared < v) throw DomainError("edges use more free vertices than \"free\" declares");
    if (declared > v) throw ConstraintError("a declared free vertex has no edges");
    // Order-preserving relabeling keeps the vertex order, so it costs no sign.
    for (auto& [t, h] : edges)
        for (int* x : {&t, &h})
            if (*x > ctx.m) *x = ctx.m + 1 + static_cast<int>(std::lower_bound(labels.begin(), labels.end(), *x) - labels.begin());
    return Diagram{ctx, v, std::move(edges)};
}

Json to_json(const DiagramCombo& x) { return combo_json(x); }
Json to_json(const DualCombo& x) { return combo_json(x); }
Json to_json(const TreeCombo& x) { return combo_json(x); }
DiagramCombo diagram_combo_from_json(const Json& j) { return combo_from<DiagramCombo>(j); }
DualCombo dual_combo_from_json(const Json& j) { return combo_from<DualCombo>(j); }

Json to_json(const BarCombo& x) { return word_json(x, "bar"); }
Json to_json(const CobarCombo& x) { return word_json(x, "cobar"); }
BarCombo bar_combo_from_json(const Json& j) {
    return word_from<BarCombo>(j, "bar", [](const BarWord& w, const Rational& c) { return word_combo(w, c); });
}
CobarCombo cobar_combo_from_json(const Json& j) {
    return word_from<CobarCombo>(j, "cobar", [](const BarWord& w, const Rational& c) { return dual_word_combo(w, c); });
}

Json to_json(const BracketExpr& b) {
    if (b.is_gen()) return Json::array({b.gen.j, b.gen.i});
    return Json::array({to_json(*b.left), to_json(*b.right)});
}

BracketExpr bracket_from_json(const Json& j, Convention c) {
    if (!j.is_array() || j.size() < 2) throw DomainError("bracket must be an array of length >= 2");
    if (j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
        return generator(j[0].get<int>(), j[1].get<int>(), c);
    BracketExpr acc = bracket_from_json(j[0], c);
    for (std::size_t k = 1; k < j.size(); ++k) acc = bracket(acc, bracket_from_json(j[k], c));
    return acc;
}

BracketExpr parse_bracket(const std::string& text, Convention c) { return bracket_from_json(parse_json(text), c); }

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

std::string to_text(const DiagramCombo& x) { return combo_text(x); }
std::string to_text(const DualCombo& x) { return combo_text(x); }
std::string to_text(const TreeCombo& x) { return combo_text(x); }
std::string to_text(const BarCombo& x) { return combo_text(x); }
std::string to_text(const CobarCombo& x) { return combo_text(x); }

}  // namespace pbdiag
