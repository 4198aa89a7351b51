#include "nsac/csvio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace nsac {

namespace {

constexpr const char* kSnapshotHeader = "x,v,u,theta,chi,mu";
constexpr const char* kSeriesHeader =
    "t,e_kin,e_W,e_phi,e_psi,e_total,V,mass,min_v,max_v,min_theta,max_theta,max_abs_chi,M_v,"
    "tilde_V";

std::vector<double> parse_row(const std::string& line) {
    std::vector<double> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(std::strtod(cell.c_str(), nullptr));
    return out;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw Error("cannot open " + path + " for writing");
    return f;
}

}  // namespace

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_snapshot_csv(const std::string& path, const Snapshot& snap) {
    std::ofstream f = open_out(path);
    f << kSnapshotHeader << "\n";
    const State& s = snap.state;
    for (int i = 0; i < s.n(); ++i)
        f << format_g17(s.grid.x(i)) << ',' << format_g17(s.v[i]) << ',' << format_g17(s.u[i])
          << ',' << format_g17(s.theta[i]) << ',' << format_g17(s.chi[i]) << ','
          << format_g17(snap.mu[i]) << "\n";
}

void write_series_csv(const std::string& path, const std::vector<SeriesRow>& series) {
    std::ofstream f = open_out(path);
    f << kSeriesHeader << "\n";
    for (const SeriesRow& r : series)
        f << format_g17(r.t) << ',' << format_g17(r.e_kin) << ',' << format_g17(r.e_W) << ','
          << format_g17(r.e_phi) << ',' << format_g17(r.e_psi) << ',' << format_g17(r.e_total)
          << ',' << format_g17(r.V) << ',' << format_g17(r.mass) << ',' << format_g17(r.min_v)
          << ',' << format_g17(r.max_v) << ',' << format_g17(r.min_theta) << ','
          << format_g17(r.max_theta) << ',' << format_g17(r.max_abs_chi) << ','
          << format_g17(r.m_v) << ',' << format_g17(r.tilde_v) << "\n";
}

std::vector<SeriesRow> read_series_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw MissingArtifacts("missing series file " + path);
    std::string line;
    if (!std::getline(f, line) || line != kSeriesHeader)
        throw MissingArtifacts("series file " + path + " has an unexpected header");
    std::vector<SeriesRow> out;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        const std::vector<double> c = parse_row(line);
        if (c.size() != 15) throw MissingArtifacts("series row with wrong column count in " + path);
        SeriesRow r{};
        r.t = c[0];
        r.e_kin = c[1];
        r.e_W = c[2];
        r.e_phi = c[3];
        r.e_psi = c[4];
        r.e_total = c[5];
        r.V = c[6];
        r.mass = c[7];
        r.min_v = c[8];
        r.max_v = c[9];
        r.min_theta = c[10];
        r.max_theta = c[11];
        r.max_abs_chi = c[12];
        r.m_v = c[13];
        r.tilde_v = c[14];
        out.push_back(r);
    }
    return out;
}

Snapshot read_snapshot_csv(const std::string& path, int step, double dt) {
    std::ifstream f(path);
    if (!f) throw MissingArtifacts("missing snapshot file " + path);
    std::string line;
    if (!std::getline(f, line) || line != kSnapshotHeader)
        throw MissingArtifacts("snapshot file " + path + " has an unexpected header");
    std::vector<double> x, v, u, theta, chi, mu;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        const std::vector<double> c = parse_row(line);
        if (c.size() != 6) throw MissingArtifacts("snapshot row with wrong column count in " + path);
        x.push_back(c[0]);
        v.push_back(c[1]);
        u.push_back(c[2]);
        theta.push_back(c[3]);
        chi.push_back(c[4]);
        mu.push_back(c[5]);
    }
    if (x.size() < 2) throw MissingArtifacts("snapshot file " + path + " is too short");
    Snapshot snap;
    snap.step = step;
    snap.state.grid = Grid1D::make(x.front(), x.back(), static_cast<int>(x.size()));
    snap.state.t = step * dt;
    snap.state.v = std::move(v);
    snap.state.u = std::move(u);
    snap.state.theta = std::move(theta);
    snap.state.chi = std::move(chi);
    snap.mu = std::move(mu);
    return snap;
}

}  // namespace nsac
