#include "coxfan/json_io.hpp"

#include "coxfan/errors.hpp"

namespace coxfan {

namespace {
long to_long(const Int& x) {
    if (!x.fits_slong_p()) throw input_error("json: integer coordinate does not fit a long");
    return x.get_si();
}
}  // namespace

std::vector<std::string> curve_lattice_labels(int r) {
    std::vector<std::string> out{"h1", "h2"};
    for (int i = 1; i <= r; ++i) out.push_back("e" + std::to_string(i));
    return out;
}

std::vector<std::string> picard_lattice_labels(int r) {
    std::vector<std::string> out{"H1", "H2"};
    for (int i = 1; i <= r; ++i) out.push_back("E" + std::to_string(i));
    return out;
}

std::vector<std::string> del_pezzo_lattice_labels(int degree) {
    std::vector<std::string> out{"h"};
    for (int i = 1; i <= 9 - degree; ++i) out.push_back("e" + std::to_string(i));
    return out;
}

Json rays_to_json(const std::vector<VecZ>& rays) {
    Json arr = Json::array();
    for (const auto& r : rays) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(to_long(x));
        arr.push_back(std::move(row));
    }
    return arr;
}

Json cone_json(const std::string& kind, const std::vector<std::string>& labels,
               const RationalCone& cone, Json meta) {
    Json j;
    j["object"] = kind;
    j["lattice"] = labels;
    j["rays"] = rays_to_json(cone.extremal_rays());
    j["meta"] = std::move(meta);
    return j;
}

Json ray_list_json(const std::string& kind, const std::vector<std::string>& labels,
                   const std::vector<VecZ>& rays, Json meta) {
    Json j;
    j["object"] = kind;
    j["lattice"] = labels;
    j["rays"] = rays_to_json(rays);
    j["meta"] = std::move(meta);
    return j;
}

Json chamber_set_json(const ChamberSet& cs, int n, std::uint64_t seed) {
    Json j;
    j["object"] = "mori_chamber_decomposition";
    j["lattice"] = picard_lattice_labels(n + 1);
    j["rays"] = rays_to_json(cs.support.extremal_rays());
    Json chambers = Json::array();
    for (const auto& ch : cs.chambers) {
        Json cj;
        cj["rays"] = rays_to_json(ch.cone.extremal_rays());
        Json ip = Json::array();
        for (const auto& q : ch.interior_point) ip.push_back(rat_to_string(q));
        cj["interior_point"] = std::move(ip);
        chambers.push_back(std::move(cj));
    }
    j["chambers"] = std::move(chambers);
    j["meta"] = Json{{"n", n}, {"r", n + 1}, {"seed", seed}};
    return j;
}

Json presentation_json(const CoxPresentation& pres, std::uint64_t seed) {
    Json j;
    j["object"] = "cox_presentation";
    j["lattice"] = picard_lattice_labels(pres.n + 1);
    Json gens = Json::array();
    for (const auto& g : pres.generators) {
        Json gj;
        gj["name"] = g.name;
        Json deg = Json::array();
        for (const auto& q : g.degree.coeffs) {
            if (q.get_den() != 1) throw input_error("presentation degree is not integral");
            deg.push_back(to_long(q.get_num()));
        }
        gj["degree"] = std::move(deg);
        gens.push_back(std::move(gj));
    }
    j["generators"] = std::move(gens);
    Json points = Json::array();
    for (const auto& [a, b] : pres.config.points)
        points.push_back(Json::array({rat_to_string(a), rat_to_string(b)}));
    j["points"] = std::move(points);
    Json rels = Json::array();
    for (const auto& rel : pres.relations) {
        Json rj = Json::array();
        for (const auto& m : rel)
            rj.push_back(Json{{"coeff", rat_to_string(m.coeff)},
                              {"monomial", Json::array({m.factors.first, m.factors.second})}});
        rels.push_back(std::move(rj));
    }
    j["relations"] = std::move(rels);
    j["meta"] = Json{{"n", pres.n}, {"r", pres.n + 1}, {"seed", seed}};
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace coxfan
