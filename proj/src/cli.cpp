#include "coxfan/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "coxfan/errors.hpp"
#include "coxfan/geometry.hpp"
#include "coxfan/gitfan.hpp"
#include "coxfan/json_io.hpp"

namespace coxfan {

namespace {

std::string format_ray(const VecZ& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ", ";
        s += r[i].get_str();
    }
    return s + ")";
}

std::string ray_table(const std::string& title, const std::vector<std::string>& labels,
                      const std::vector<VecZ>& rays) {
    std::ostringstream os;
    os << title << "\n";
    os << "lattice: ";
    for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? " " : "") << labels[i];
    os << "\n";
    for (const auto& r : rays) os << "  " << format_ray(r) << "\n";
    os << "rays: " << rays.size() << "\n";
    return os.str();
}

struct Emitter {
    std::string format = "table";
    std::string out_file;

    void emit(std::ostream& out, const Json& json, const std::string& table) const {
        const std::string payload = format == "json" ? dump(json) : table;
        if (out_file.empty()) {
            out << payload;
        } else {
            std::ofstream f(out_file, std::ios::binary);
            if (!f) throw input_error("cannot open output file: " + out_file);
            f << payload;
        }
    }
};

struct VerifyReport {
    std::ostream& out;
    bool all_ok = true;

    void check(const std::string& name, bool ok) {
        out << (ok ? "PASS" : "FAIL") << " " << name << "\n";
        all_ok = all_ok && ok;
    }
};

void verify_cones(VerifyReport& rep, int nmax) {
    for (int n = 1; n <= nmax; ++n) {
        std::vector<int> rs = {n + 1, n + 2};
        if (n <= 4) rs.push_back(n + 3);
        for (int r : rs) {
            const Signature sig(n, r);
            const RationalCone nef = nef_cone(sig);
            const RationalCone mori = mori_cone(sig);
            const std::string tag = "n=" + std::to_string(n) + ",r=" + std::to_string(r);
            rep.check("cones/duality " + tag, dual_via_pairing(mori).equals(nef));
            std::size_t expect = 0;
            if (r == n + 1)
                expect = (std::size_t(1) << (n + 1)) + 1;
            else if (r == n + 2)
                expect = (std::size_t(1) << (n + 2)) + 2;
            else
                expect = (std::size_t(1) << (n + 4)) - (n + 3) * (n + 2) / 2;
            rep.check("cones/nef-ray-count " + tag,
                      nef.extremal_rays().size() == expect);
        }
    }
    for (int n = 2; n <= std::min(nmax, 5); ++n)
        rep.check("cones/movable-duality n=" + std::to_string(n),
                  dual_via_pairing(movable_cone(n)).equals(moving_curve_cone(n)));
}

void verify_cox(VerifyReport& rep, int nmax) {
    for (int n = 2; n <= std::max(nmax, 2); ++n)
        for (std::uint64_t seed : {0, 1, 2}) {
            const auto pres = build_presentation(n, sample_points(n, seed));
            rep.check("cox/homogeneity n=" + std::to_string(n) + ",seed=" +
                          std::to_string(seed),
                      check_homogeneity(pres));
        }
}

void verify_mcd(VerifyReport& rep, int nmax, int jobs) {
    const std::size_t expected[] = {0, 0, 92, 550, 6307};
    for (int n = 2; n <= std::min(nmax, 4); ++n) {
        const auto pres = build_presentation(n, sample_points(n, 0));
        rep.check("mcd/chamber-count n=" + std::to_string(n) + " (" +
                      std::to_string(expected[n]) + ")",
                  chamber_count(pres, jobs) == expected[n]);
    }
}

int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact birational cone data for blow-ups of P^1 x P^n"};
    app.require_subcommand(1);
    app.fallthrough(false);

    Emitter emitter;
    int n = 2, r = 3, degree = 3, jobs = 1, nmax = 4;
    std::uint64_t seed = 0;
    std::string suite = "all";

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", emitter.format, "output format")
            ->check(CLI::IsMember({"json", "table"}));
        cmd->add_option("--out", emitter.out_file, "write output to FILE");
    };

    auto* c_mori = app.add_subcommand("mori", "Mori cone generators of X^{1,n}_r");
    c_mori->add_option("--n", n, "dimension of the P^n factor")->required();
    c_mori->add_option("--r", r, "number of blown-up points")->required();
    add_common(c_mori);

    auto* c_nef = app.add_subcommand("nef", "nef cone of X^{1,n}_r");
    c_nef->add_option("--n", n)->required();
    c_nef->add_option("--r", r)->required();
    add_common(c_nef);

    auto* c_mov = app.add_subcommand("mov", "movable cone of X^{1,n}_{n+1}");
    c_mov->add_option("--n", n)->required();
    add_common(c_mov);

    auto* c_eff = app.add_subcommand("eff", "effective cone of X^{1,n}_{n+1}");
    c_eff->add_option("--n", n)->required();
    add_common(c_eff);

    auto* c_cox = app.add_subcommand("coxring", "Cox ring presentation of X^{1,n}_{n+1}");
    c_cox->add_option("--n", n)->required();
    c_cox->add_option("--seed", seed, "point sampling seed");
    add_common(c_cox);

    auto* c_mcd = app.add_subcommand("mcd", "Mori chamber decomposition of Eff(X^{1,n}_{n+1})");
    c_mcd->add_option("--n", n)->required();
    c_mcd->add_option("--seed", seed, "point sampling seed");
    c_mcd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    add_common(c_mcd);

    auto* c_dp = app.add_subcommand("delpezzo", "del Pezzo Mori cone ray table");
    c_dp->add_option("--degree", degree, "del Pezzo degree (1, 2 or 3)")->required();
    add_common(c_dp);

    auto* c_verify = app.add_subcommand("verify", "run verification suites");
    c_verify->add_option("--suite", suite, "all|cones|cox|mcd")
        ->check(CLI::IsMember({"all", "cones", "cox", "mcd"}));
    c_verify->add_option("--n-max", nmax, "largest n exercised")->check(CLI::PositiveNumber);
    c_verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "ERROR:usage: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_mori->parsed()) {
            const Signature sig(n, r);
            const RationalCone cone = mori_cone(sig);
            const auto labels = curve_lattice_labels(r);
            emitter.emit(out, cone_json("mori_cone", labels, cone, Json{{"n", n}, {"r", r}}),
                         ray_table("mori_cone n=" + std::to_string(n) + " r=" + std::to_string(r),
                                   labels, cone.extremal_rays()));
        } else if (c_nef->parsed()) {
            const Signature sig(n, r);
            const RationalCone cone = nef_cone(sig);
            const auto labels = picard_lattice_labels(r);
            emitter.emit(out, cone_json("nef_cone", labels, cone, Json{{"n", n}, {"r", r}}),
                         ray_table("nef_cone n=" + std::to_string(n) + " r=" + std::to_string(r),
                                   labels, cone.extremal_rays()));
        } else if (c_mov->parsed()) {
            const RationalCone cone = movable_cone(n);
            const auto labels = picard_lattice_labels(n + 1);
            emitter.emit(out, cone_json("movable_cone", labels, cone, Json{{"n", n}, {"r", n + 1}}),
                         ray_table("movable_cone n=" + std::to_string(n), labels,
                                   cone.extremal_rays()));
        } else if (c_eff->parsed()) {
            const RationalCone cone = effective_cone(n);
            const auto labels = picard_lattice_labels(n + 1);
            emitter.emit(out,
                         cone_json("effective_cone", labels, cone, Json{{"n", n}, {"r", n + 1}}),
                         ray_table("effective_cone n=" + std::to_string(n), labels,
                                   cone.extremal_rays()));
        } else if (c_cox->parsed()) {
            const auto pres = build_presentation(n, sample_points(n, seed));
            std::ostringstream table;
            table << "cox_presentation n=" << n << " seed=" << seed << "\n";
            for (const auto& g : pres.generators) {
                table << "  " << g.name << " : deg = " << format_ray(
                    integer_primitive(g.degree.coeffs)) << "\n";
            }
            table << "relations: " << pres.relations.size() << "\n";
            for (std::size_t i = 0; i < pres.relations.size(); ++i) {
                const auto& rel = pres.relations[i];
                table << "  g" << (i + 1) << " =";
                for (int t = 0; t < 3; ++t) {
                    const auto& m = rel[t];
                    table << (t ? " + " : " ") << "(" << rat_to_string(m.coeff) << ")*"
                          << pres.generators[m.factors.first].name << "*"
                          << pres.generators[m.factors.second].name;
                }
                table << "\n";
            }
            emitter.emit(out, presentation_json(pres, seed), table.str());
        } else if (c_mcd->parsed()) {
            const auto pres = build_presentation(n, sample_points(n, seed));
            const ChamberSet cs = mori_chamber_decomposition(pres, jobs);
            std::ostringstream table;
            table << "mori_chamber_decomposition n=" << n << " seed=" << seed << "\n";
            table << "support rays: " << cs.support.extremal_rays().size() << "\n";
            table << "chambers: " << cs.chambers.size() << "\n";
            emitter.emit(out, chamber_set_json(cs, n, seed), table.str());
        } else if (c_dp->parsed()) {
            const auto rays = del_pezzo_mori_rays(degree);
            const auto labels = del_pezzo_lattice_labels(degree);
            std::ostringstream table;
            table << "del_pezzo_mori_rays degree=" << degree << "\n";
            const auto sizes = del_pezzo_row_sizes(degree);
            table << "row sizes:";
            for (auto s : sizes) table << " " << s;
            table << "\n";
            table << "rays: " << rays.size() << "\n";
            emitter.emit(out, ray_list_json("del_pezzo_mori_rays", labels, rays,
                                            Json{{"degree", degree}}),
                         table.str());
        } else if (c_verify->parsed()) {
            VerifyReport rep{out};
            if (suite == "all" || suite == "cones") verify_cones(rep, nmax);
            if (suite == "all" || suite == "cox") verify_cox(rep, nmax);
            if (suite == "all" || suite == "mcd") verify_mcd(rep, nmax, jobs);
            if (!rep.all_ok) {
                err << "ERROR:verify: one or more checks failed\n";
                return 1;
            }
        }
    } catch (const unsupported_signature_error& e) {
        err << "ERROR:" << e.kind() << ": " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        err << "ERROR:" << e.kind() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "ERROR:internal: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    return run_app(argc, argv, out, err);
}

}  // namespace coxfan
