#include "qgrass/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qgrass {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(Cplx v) {
    std::string out = format_real(v.real());
    out += (std::signbit(v.imag()) ? "-" : "+");
    out += format_real(std::abs(v.imag()));
    out += "i";
    return out;
}

nlohmann::json point_to_json(const PetersonPoint& p) {
    nlohmann::json coords = nlohmann::json::array();
    for (Cplx c : p.coordinates()) coords.push_back({c.real(), c.imag()});
    return nlohmann::json{
        {"kind", std::string(kind_name(p.kind()))},
        {"n", p.rank()},
        {"doubled_indices", p.tuple().doubled_indices()},
        {"parity", p.tuple().parity() == Parity::even ? "e" : "o"},
        {"closed", p.tuple().is_closed()},
        {"t", p.scale()},
        {"coordinates", coords},
    };
}

PetersonPoint point_from_json(const nlohmann::json& j) {
    Kind kind = parse_kind(j.at("kind").get<std::string>());
    int n = j.at("n").get<int>();
    auto doubled = j.at("doubled_indices").get<std::vector<int>>();
    double t = j.at("t").get<double>();
    int order = (kind == Kind::og) ? n : n + 1;
    PetersonPoint p = PetersonPoint::at_scale(kind, n, ExclusiveTuple(order, doubled), t);

    std::string parity = j.at("parity").get<std::string>();
    if (parity != (p.tuple().parity() == Parity::even ? "e" : "o"))
        throw std::invalid_argument("stored parity disagrees with the tuple");
    if (j.at("closed").get<bool>() != p.tuple().is_closed())
        throw std::invalid_argument("stored closed flag disagrees with the tuple");
    const auto& coords = j.at("coordinates");
    if (coords.size() != p.coordinates().size())
        throw std::invalid_argument("stored coordinate count disagrees with the tuple");
    for (size_t i = 0; i < coords.size(); ++i) {
        Cplx stored(coords[i].at(0).get<double>(), coords[i].at(1).get<double>());
        if (std::abs(stored - p.coordinates()[i]) > 1e-12)
            throw std::invalid_argument("stored coordinates disagree with the tuple");
    }
    return p;
}

nlohmann::json ring_to_json(const RingElement& x) {
    std::vector<std::pair<RingElement::Key, long long>> order(x.terms().begin(),
                                                              x.terms().end());
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second < b.first.second;
        return basis_less(a.first.first, b.first.first);
    });
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [key, c] : order)
        out.push_back({{"partition", key.first.to_string()},
                       {"q", key.second},
                       {"coeff", c}});
    return out;
}

RingElement ring_from_json(Kind kind, int n, const nlohmann::json& j) {
    RingElement out(kind, n);
    for (const auto& term : j)
        out.add_term(StrictPartition::parse(term.at("partition").get<std::string>()),
                     term.at("q").get<int>(), term.at("coeff").get<long long>());
    return out;
}

nlohmann::json report_to_json(const ConjectureOReport& r) {
    nlohmann::json spectrum = nlohmann::json::array();
    for (const SpectralCluster& c : r.spectrum)
        spectrum.push_back({{"re", c.value.real()},
                            {"im", c.value.imag()},
                            {"multiplicity", c.multiplicity}});
    return nlohmann::json{
        {"kind", std::string(kind_name(r.kind))},
        {"n", r.n},
        {"fano_index", r.fano},
        {"T0", r.t0},
        {"spectrum", spectrum},
        {"conditions", {{"cond1", r.cond1}, {"cond2", r.cond2}, {"cond3", r.cond3}}},
        {"max_modulus_count", r.max_modulus_count},
        {"indeterminate", r.indeterminate},
        {"note", r.note},
    };
}

ConjectureOReport report_from_json(const nlohmann::json& j) {
    ConjectureOReport r;
    r.kind = parse_kind(j.at("kind").get<std::string>());
    r.n = j.at("n").get<int>();
    r.fano = j.at("fano_index").get<int>();
    r.t0 = j.at("T0").get<double>();
    for (const auto& c : j.at("spectrum"))
        r.spectrum.push_back(SpectralCluster{
            Cplx(c.at("re").get<double>(), c.at("im").get<double>()),
            c.at("multiplicity").get<int>()});
    r.cond1 = j.at("conditions").at("cond1").get<bool>();
    r.cond2 = j.at("conditions").at("cond2").get<bool>();
    r.cond3 = j.at("conditions").at("cond3").get<bool>();
    r.max_modulus_count = j.at("max_modulus_count").get<int>();
    r.indeterminate = j.at("indeterminate").get<bool>();
    r.note = j.value("note", std::string{});
    return r;
}

}  // namespace qgrass
