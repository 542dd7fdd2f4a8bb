#include "seglab/snapshot.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "seglab/error.hpp"

namespace seglab {
namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double read_real(std::istream& is, const char* what) {
    std::string tok;
    if (!(is >> tok)) throw Error(ErrorCode::SnapshotParse, std::string("missing ") + what);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw Error(ErrorCode::SnapshotParse, "bad number '" + tok + "' for " + what);
    return v;
}

std::size_t read_count(std::istream& is, const char* what) {
    const double v = read_real(is, what);
    if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v)))
        throw Error(ErrorCode::SnapshotParse, std::string(what) + " must be a nonnegative integer");
    return static_cast<std::size_t>(v);
}

}  // namespace

void write_snapshot(std::ostream& os, const MultiField& mf) {
    const Domain& d = mf.domain();
    os << "SEGFIELD 1\n";
    os << mf.nspecies() << ' ' << d.nx() << ' ' << d.ny() << ' ' << fmt17(d.x0()) << ' ' << fmt17(d.y0()) << ' '
       << fmt17(d.h()) << ' ' << fmt17(mf.beta()) << '\n';
    for (std::size_t s = 0; s < mf.nspecies(); ++s) {
        const ScalarField& u = mf.species(s);
        for (std::size_t j = 0; j < d.ny(); ++j) {
            for (std::size_t i = 0; i < d.nx(); ++i) {
                if (i) os << ' ';
                os << fmt17(u(i, j));
            }
            os << '\n';
        }
    }
}

void write_snapshot(const std::filesystem::path& path, const MultiField& mf) {
    std::ofstream os(path);
    if (!os) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
    write_snapshot(os, mf);
    if (!os) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

MultiField read_snapshot(std::istream& is) {
    std::string magic;
    std::getline(is, magic);
    if (!magic.empty() && magic.back() == '\r') magic.pop_back();
    if (magic != "SEGFIELD 1") throw Error(ErrorCode::SnapshotParse, "expected header 'SEGFIELD 1'");

    const std::size_t nspecies = read_count(is, "nspecies");
    const std::size_t nx = read_count(is, "nx");
    const std::size_t ny = read_count(is, "ny");
    const double x0 = read_real(is, "x0");
    const double y0 = read_real(is, "y0");
    const double h = read_real(is, "h");
    const double beta = read_real(is, "beta");
    if (nspecies < 2) throw Error(ErrorCode::SnapshotParse, "nspecies must be >= 2");

    try {
        MultiField mf(Domain(x0, y0, h, nx, ny), nspecies, beta);
        for (std::size_t s = 0; s < nspecies; ++s)
            for (double& v : mf.species(s).values()) v = read_real(is, "field value");
        std::string extra;
        if (is >> extra) throw Error(ErrorCode::SnapshotParse, "trailing data after last block");
        mf.validate();
        return mf;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SnapshotParse) throw;
        throw Error(ErrorCode::SnapshotParse, e.what());
    }
}

MultiField read_snapshot(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw Error(ErrorCode::SnapshotParse, "cannot open " + path.string());
    return read_snapshot(is);
}

}  // namespace seglab
