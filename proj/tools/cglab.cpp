// cglab: constants tables, pointwise scalar curvature, closed-form vs
// oracle verification, and (c,k) positivity-region scans.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage, 3 domain/degeneracy.
#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cglab/closed_forms.hpp"
#include "cglab/errors.hpp"
#include "cglab/oracle.hpp"
#include "cglab/scan.hpp"
#include "cglab/verify.hpp"

using nlohmann::json;

namespace {

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << text;
}

struct RangeSpec {
    double lo = 0.0, hi = 0.0;
    int steps = 0;
};

RangeSpec parse_range(const std::string& s) {
    RangeSpec r;
    char extra = 0;
    if (std::sscanf(s.c_str(), "%lf:%lf:%d%c", &r.lo, &r.hi, &r.steps, &extra) != 3)
        throw std::invalid_argument("range must be a:b:steps, got '" + s + "'");
    return r;
}

std::vector<double> parse_csv_doubles(const std::string& s) {
    std::vector<double> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad number in list: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

// "x1,..,xn/m1,..,mr"; a missing fiber part means the zero section
std::pair<std::vector<double>, std::vector<double>> parse_point(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return {parse_csv_doubles(s), {}};
    return {parse_csv_doubles(s.substr(0, slash)), parse_csv_doubles(s.substr(slash + 1))};
}

int run_constants(int n_min, int n_max, const std::vector<double>& c_list,
                  const std::string& format, const std::string& out_path) {
    if (n_min < 2 || n_min > n_max) throw std::invalid_argument("need 2 <= n-min <= n-max");

    json rows = json::array();
    std::string csv = "n,r,a,b,d,threshold";
    for (double c : c_list) csv += ",K(c=" + fmt_g(c) + ")";
    csv += "\n";

    for (int n = n_min; n <= n_max; ++n) {
        const cglab::PositivityConstants pc = cglab::positivity_constants(n);
        const int r = cglab::AtiyahParams::rank(n);
        json row{{"n", n}, {"r", r}, {"a", pc.a}, {"b", pc.b},
                 {"d", pc.d}, {"threshold", pc.threshold}};
        csv += std::to_string(n) + "," + std::to_string(r) + "," + fmt_g(pc.a) + "," +
               fmt_g(pc.b) + "," + fmt_g(pc.d) + "," + fmt_g(pc.threshold);
        json ks = json::array();
        for (double c : c_list) {
            if (c == 0.0 || c <= pc.threshold) {
                csv += ",";
                ks.push_back(nullptr);
            } else {
                const double kv = pc.K(c);
                csv += "," + fmt_g(kv);
                ks.push_back(kv);
            }
        }
        row["k_upper"] = ks;
        rows.push_back(row);
        csv += "\n";
    }
    if (format == "json")
        emit(json{{"c_list", c_list}, {"rows", rows}}.dump(2) + "\n", out_path);
    else
        emit(csv, out_path);
    return 0;
}

int run_scalar(const std::string& model, int n, double c, double k, double p, double q,
               const std::string& point, const std::string& format, const std::string& out_path) {
    const cglab::SpaceForm sf(n, c);
    cglab::EuclideanBundle bundle;
    if (model == "tm")
        bundle = cglab::build_tangent_bundle(sf);
    else if (model == "atiyah")
        bundle = cglab::build_atiyah_bundle(sf, cglab::AtiyahParams(k));
    else
        throw std::invalid_argument("model must be tm or atiyah");

    auto [x, mu] = parse_point(point);
    if (x.empty()) x.assign(bundle.n, 0.0);
    if (mu.empty()) mu.assign(bundle.r, 0.0);
    if (static_cast<int>(x.size()) != bundle.n || static_cast<int>(mu.size()) != bundle.r)
        throw std::invalid_argument("point must have " + std::to_string(bundle.n) + "/" +
                                    std::to_string(bundle.r) + " coordinates");

    const cglab::CGParams params(p, q);
    const cglab::TotalSpacePoint pt{x, mu};

    std::optional<double> closed;
    if (model == "tm") {
        closed = cglab::total_scalar_e(params, bundle, pt);
    } else if (p == 1.0 && q == 1.0) {
        std::vector<double> z;
        cglab::SkewEndomorphism f;
        cglab::atiyah_split(mu, n, k, z, f);
        closed = cglab::atiyah_scalar(n, c, k, z, f);
    }

    const cglab::MetricField field = cglab::cg_metric_field(bundle, params);
    std::vector<double> zfull = x;
    zfull.insert(zfull.end(), mu.begin(), mu.end());
    const double oracle = cglab::curvature_report(field, zfull, cglab::Convention::reversed).scalar;

    json out{{"model", model}, {"n", n}, {"c", c}, {"p", p},
             {"q", q}, {"oracle", oracle}};
    if (model == "atiyah") out["k"] = k;
    out["point_base"] = x;
    out["point_fiber"] = mu;
    if (closed) {
        out["closed_form"] = *closed;
        out["rel_diff"] = std::abs(*closed - oracle) / std::max(1.0, std::abs(oracle));
    } else {
        out["closed_form"] = nullptr;
        out["rel_diff"] = nullptr;
    }

    if (format == "csv") {
        std::string csv = "closed_form,oracle,rel_diff\n";
        csv += (closed ? fmt_g(*closed) : "") + std::string(",") + fmt_g(oracle) + "," +
               (closed ? fmt_g(std::abs(*closed - oracle) / std::max(1.0, std::abs(oracle))) : "") +
               "\n";
        emit(csv, out_path);
    } else {
        emit(out.dump(2) + "\n", out_path);
    }
    return 0;
}

int run_verify(const std::string& case_name, const cglab::VerifyOptions& opt,
               const std::string& format, const std::string& out_path) {
    const cglab::VerificationReport rep = cglab::verify_case(case_name, opt);
    if (format == "csv") {
        std::string csv = "case_name,samples,max_abs_err,max_rel_err,tolerance,pass\n";
        csv += rep.case_name + "," + std::to_string(rep.samples) + "," + fmt_g(rep.max_abs_err) +
               "," + fmt_g(rep.max_rel_err) + "," + fmt_g(rep.tolerance) + "," +
               (rep.pass ? "true" : "false") + "\n";
        emit(csv, out_path);
    } else {
        emit(json{{"case_name", rep.case_name},
                  {"samples", rep.samples},
                  {"max_abs_err", rep.max_abs_err},
                  {"max_rel_err", rep.max_rel_err},
                  {"tolerance", rep.tolerance},
                  {"pass", rep.pass}}
                 .dump(2) +
                 "\n",
             out_path);
    }
    return rep.pass ? 0 : 1;
}

int run_region(const cglab::RegionScanConfig& config, const std::string& mode_name,
               const std::string& format, const std::string& out_path) {
    cglab::RegionMode mode;
    if (mode_name == "closed")
        mode = cglab::RegionMode::closed;
    else if (mode_name == "empirical")
        mode = cglab::RegionMode::empirical;
    else if (mode_name == "both")
        mode = cglab::RegionMode::both;
    else
        throw std::invalid_argument("mode must be closed, empirical or both");

    const auto cells = cglab::region_scan(config, mode);
    if (format == "json") {
        json arr = json::array();
        for (const auto& cell : cells) {
            json jc{{"c", cell.c}, {"k", cell.k}, {"closed_positive", cell.closed_positive}};
            if (mode != cglab::RegionMode::closed) jc["empirical_min"] = cell.empirical_min;
            if (mode == cglab::RegionMode::both) jc["disagree"] = cell.disagree;
            arr.push_back(jc);
        }
        emit(arr.dump(2) + "\n", out_path);
    } else {
        emit(cglab::region_csv(cells, mode), out_path);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Cheeger-Gromoll metrics on Euclidean bundles: "
                 "curvature formulas vs an independent coordinate oracle"};
    app.require_subcommand(1);

    // constants
    auto* cmd_constants = app.add_subcommand("constants", "positivity constants C_n and K(n,c)");
    int n_min = 2, n_max = 6;
    std::vector<double> c_list;
    std::string const_format = "csv", const_out;
    cmd_constants->add_option("--n-min", n_min);
    cmd_constants->add_option("--n-max", n_max);
    cmd_constants->add_option("--c", c_list, "curvature values for the K(n,c) columns");
    cmd_constants->add_option("--format", const_format)->check(CLI::IsMember({"csv", "json"}));
    cmd_constants->add_option("--out", const_out);

    // scalar
    auto* cmd_scalar = app.add_subcommand("scalar", "closed-form and oracle scalar curvature");
    std::string model = "tm", point, scalar_format = "json", scalar_out;
    int sn = 2;
    double sc = 1.0, sk = 1.0, sp = 1.0, sq = 1.0;
    cmd_scalar->add_option("--model", model)->check(CLI::IsMember({"tm", "atiyah"}));
    cmd_scalar->add_option("--n", sn);
    cmd_scalar->add_option("--c", sc);
    cmd_scalar->add_option("--k", sk);
    cmd_scalar->add_option("--p", sp);
    cmd_scalar->add_option("--q", sq);
    cmd_scalar->add_option("--point", point, "x1,..,xn/m1,..,mr");
    cmd_scalar->add_option("--format", scalar_format)->check(CLI::IsMember({"csv", "json"}));
    cmd_scalar->add_option("--out", scalar_out);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "closed-form vs independent-oracle checks");
    std::string case_name, verify_format = "json", verify_out;
    cglab::VerifyOptions vopt;
    cmd_verify->add_option("--case", case_name)->required();
    cmd_verify->add_option("--n", vopt.n);
    cmd_verify->add_option("--c", vopt.c);
    cmd_verify->add_option("--k", vopt.k);
    cmd_verify->add_option("--samples", vopt.samples);
    cmd_verify->add_option("--seed", vopt.seed);
    cmd_verify->add_option("--tol", vopt.tol);
    cmd_verify->add_option("--format", verify_format)->check(CLI::IsMember({"csv", "json"}));
    cmd_verify->add_option("--out", verify_out);

    // region
    auto* cmd_region = app.add_subcommand("region", "(c,k) positivity region scan");
    cglab::RegionScanConfig rconf;
    std::string c_range = "-1:1:9", k_range = "0.5:8:16", mode_name = "closed";
    std::string region_format = "csv", region_out;
    cmd_region->add_option("--n", rconf.n);
    cmd_region->add_option("--c-range", c_range, "a:b:steps");
    cmd_region->add_option("--k-range", k_range, "a:b:steps");
    cmd_region->add_option("--samples", rconf.sample_points);
    cmd_region->add_option("--seed", rconf.seed);
    cmd_region->add_option("--z-max", rconf.z_max);
    cmd_region->add_option("--f-max", rconf.f_max);
    cmd_region->add_option("--mode", mode_name)->check(CLI::IsMember({"closed", "empirical", "both"}));
    cmd_region->add_option("--format", region_format)->check(CLI::IsMember({"csv", "json"}));
    cmd_region->add_option("--out", region_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (cmd_constants->parsed())
            return run_constants(n_min, n_max, c_list, const_format, const_out);
        if (cmd_scalar->parsed())
            return run_scalar(model, sn, sc, sk, sp, sq, point, scalar_format, scalar_out);
        if (cmd_verify->parsed()) return run_verify(case_name, vopt, verify_format, verify_out);
        if (cmd_region->parsed()) {
            const RangeSpec cr = parse_range(c_range), kr = parse_range(k_range);
            rconf.c_min = cr.lo;
            rconf.c_max = cr.hi;
            rconf.c_steps = cr.steps;
            rconf.k_min = kr.lo;
            rconf.k_max = kr.hi;
            rconf.k_steps = kr.steps;
            return run_region(rconf, mode_name, region_format, region_out);
        }
    } catch (const cglab::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const cglab::DegeneracyError& e) {
        std::cerr << "degeneracy error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
