#include "kmu/json_io.hpp"

#include "kmu/parser.hpp"

namespace kmu {

namespace {

Scalar scalar_from_json(const Json& j) {
    Field Q = Field::rationals();
    if (j.is_number_integer()) return Scalar::of_int(j.get<std::int64_t>(), Q);
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) return Scalar::of_int(std::stoll(s), Q);
        return Scalar::fraction(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)), Q);
    }
    throw DomainError("expected an integer or \"p/q\" string");
}

Json scalar_to_json(const Scalar& s) {
    if (s.den() == 1) return Json(s.num());
    return Json(s.str());
}

}  // namespace

Json ring_to_json(const GradedRing& ring) {
    return Json{{"vars", ring.vars()}, {"weights", ring.weights()}, {"field", ring.field().name()}};
}

RingPtr ring_from_json(const Json& j) {
    if (!j.contains("vars") || !j.contains("weights")) throw DomainError("ring JSON needs vars and weights");
    Field f = j.contains("field") ? Field::parse(j.at("field").get<std::string>()) : Field::prime(101);
    return GradedRing::make(j.at("vars").get<std::vector<std::string>>(),
                            j.at("weights").get<std::vector<int>>(), f);
}

Json ideal_to_json(const Ideal& I) {
    Json gens = Json::array();
    for (const auto& g : I.generators()) gens.push_back(g.str());
    return Json{{"ring", ring_to_json(*I.ring())}, {"generators", gens}};
}

Ideal ideal_from_json(const Json& j) {
    RingPtr ring = ring_from_json(j.at("ring"));
    std::vector<Polynomial> gens;
    for (const auto& s : j.at("generators")) gens.push_back(parse_polynomial(s.get<std::string>(), ring));
    return Ideal(ring, std::move(gens));
}

Json ambient_to_json(const AmbientSpace& a) {
    Json cons = Json::array();
    for (const auto& c : a.constraints) {
        if (c.kind == Constraint::Kind::hypersurface)
            cons.push_back(c.degree);
        else if (c.twice_profile == std::vector<int>{1, 1, 1, 1, 1})
            cons.push_back("Pf");
        else
            cons.push_back(Json{{"pf", c.twice_profile}});
    }
    return Json{{"weights", a.weights}, {"field", a.field.name()}, {"constraints", cons}};
}

AmbientSpace ambient_from_json(const Json& j, Field default_field) {
    AmbientSpace a;
    a.weights = j.at("weights").get<std::vector<int>>();
    a.field = j.contains("field") ? Field::parse(j.at("field").get<std::string>()) : default_field;
    if (j.contains("constraints"))
        for (const auto& c : j.at("constraints")) {
            if (c.is_number_integer())
                a.constraints.push_back(Constraint::hypersurface(c.get<long long>()));
            else if (c.is_string() && c.get<std::string>() == "Pf")
                a.constraints.push_back(Constraint::pfaffian_sheet());
            else if (c.is_object() && c.contains("pf"))
                a.constraints.push_back(Constraint::pfaffian_sheet(c.at("pf").get<std::vector<int>>()));
            else
                throw DomainError("constraint must be a degree, \"Pf\" or {\"pf\": profile}");
        }
    return a;
}

Json spec_to_json(const VarietySpec& v) {
    Json j{{"name", v.name}, {"ambient", ambient_to_json(v.ambient)}};
    switch (v.presentation.kind) {
        case Presentation::Kind::ci: j["ci"] = v.presentation.ci; break;
        case Presentation::Kind::pfaffian: j["pfaffian"] = v.presentation.twice_profile; break;
        case Presentation::Kind::explicit_ideal: j["generators"] = v.presentation.generators; break;
    }
    return j;
}

VarietySpec spec_from_json(const Json& j, Field default_field) {
    VarietySpec v;
    v.name = j.value("name", "");
    v.ambient = ambient_from_json(j.at("ambient"), default_field);
    int kinds = j.contains("ci") + j.contains("pfaffian") + j.contains("generators");
    if (kinds != 1) throw DomainError("spec needs exactly one of ci / pfaffian / generators");
    if (j.contains("ci"))
        v.presentation = Presentation::complete_intersection(j.at("ci").get<std::vector<long long>>());
    else if (j.contains("pfaffian"))
        v.presentation = Presentation::pfaffian(j.at("pfaffian").get<std::vector<int>>());
    else
        v.presentation = Presentation::explicit_ideal(j.at("generators").get<std::vector<std::string>>());
    return v;
}

Json invariants_to_json(const InvariantSet& inv) {
    Json j{{"h3", scalar_to_json(inv.h3)}, {"h0", inv.h0}};
    if (inv.c2h) j["c2h"] = scalar_to_json(*inv.c2h);
    if (inv.chi) j["chi"] = *inv.chi;
    if (inv.h12) j["h12"] = *inv.h12;
    return j;
}

InvariantSet invariants_from_json(const Json& j) {
    InvariantSet inv;
    inv.h3 = scalar_from_json(j.at("h3"));
    inv.h0 = j.value("h0", 0);
    if (j.contains("c2h")) inv.c2h = scalar_from_json(j.at("c2h"));
    if (j.contains("chi")) inv.chi = j.at("chi").get<long long>();
    if (j.contains("h12")) inv.h12 = j.at("h12").get<long long>();
    return inv;
}

Json betti_to_json(const BettiTable& t) {
    Json entries = Json::array();
    for (const auto& [k, v] : t.entries())
        entries.push_back(Json{{"i", k.first}, {"j", k.second}, {"beta", v}});
    return Json{{"codim", t.codim()}, {"entries", entries}, {"layout", t.layout()}};
}

BettiTable betti_from_json(const Json& j) {
    BettiTable t(j.value("codim", -1));
    for (const auto& e : j.at("entries"))
        t.add(e.at("i").get<int>(), e.at("j").get<long long>(), e.at("beta").get<long long>());
    return t;
}

Json unprojection_to_json(const UnprojectionResult& r) {
    Json j{{"mechanism", r.mechanism}, {"seed", r.seed}, {"ring", ring_to_json(*r.ring)}};
    Json gens = Json::array();
    for (const auto& g : r.y_generators) gens.push_back(g.str());
    j["generators"] = gens;
    Json cons = Json::array();
    for (const auto& c : r.lifted_constraints) cons.push_back(c.str());
    j["constraints"] = cons;
    Json exc = Json::array();
    for (const auto& g : r.exceptional.generators()) exc.push_back(g.str());
    j["exceptional"] = exc;
    if (!r.point.empty()) {
        Json pt = Json::array();
        for (const auto& c : r.point) pt.push_back(scalar_to_json(c));
        j["point"] = pt;
    }
    if (r.matrix) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < r.matrix->size(); ++i) {
            Json row = Json::array();
            for (std::size_t k = 0; k < r.matrix->size(); ++k) row.push_back(r.matrix->at(i, k).str());
            rows.push_back(row);
        }
        j["matrix"] = rows;
        j["matrix_profile_doubled"] = r.matrix->twice_row_weights();
    }
    if (r.y_spec) j["y_spec"] = spec_to_json(*r.y_spec);
    return j;
}

Json singularity_report_to_json(const SingularityReport& r) {
    Json j{{"verdict", r.verdict_name()}, {"method", r.method}};
    if (r.method != "witness-point") {
        j["dimension"] = r.dimension;
        if (r.degree) j["degree"] = *r.degree;
        j["reductions"] = r.reductions;
    }
    if (r.witness) {
        Json w = Json::array();
        for (const auto& c : *r.witness) w.push_back(scalar_to_json(c));
        j["witness"] = w;
    }
    return j;
}

}  // namespace kmu
