#include "xychain/csv.hpp"

#include <array>
#include <charconv>
#include <complex>

namespace xychain {

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

void write_sequence_csv(std::ostream& out, const DisorderSequence& sequence) {
    out << "n,value\n";
    for (std::size_t i = 0; i < sequence.values.size(); ++i)
        out << i + 1 << ',' << format_double(sequence.values[i]) << '\n';
}

void write_alpha_sweep_csv(std::ostream& out, const std::vector<AlphaPoint>& points) {
    out << "n_sites,alpha,mean_c,std_c,stderr_c,n,resonance_fraction\n";
    for (const auto& p : points)
        out << p.n_sites << ',' << format_double(p.alpha) << ',' << format_double(p.stats.mean_c) << ','
            << format_double(p.stats.std_c) << ',' << format_double(p.stats.stderr_c) << ','
            << p.stats.n << ',' << format_double(p.stats.resonance_fraction) << '\n';
}

void write_grid_csv(std::ostream& out, const std::vector<GridPoint>& points) {
    out << "alpha,omega,mean_c,stderr_c,n\n";
    for (const auto& p : points)
        out << format_double(p.alpha) << ',' << format_double(p.omega) << ','
            << format_double(p.stats.mean_c) << ',' << format_double(p.stats.stderr_c) << ','
            << p.stats.n << '\n';
}

void write_profile_csv(std::ostream& out, const WavefunctionProfile& profile) {
    out << "n,prob\n";
    for (std::size_t i = 0; i < profile.probabilities.size(); ++i)
        out << i + 1 << ',' << format_double(profile.probabilities[i]) << '\n';
}

void write_dynamics_csv(std::ostream& out, const DynamicsTrace& trace) {
    out << "t,re_ds,im_ds,re_dr,im_dr,c_sr,leak\n";
    for (std::size_t i = 0; i < trace.times.size(); ++i)
        out << format_double(trace.times[i]) << ',' << format_double(trace.amp_s[i].real()) << ','
            << format_double(trace.amp_s[i].imag()) << ',' << format_double(trace.amp_r[i].real())
            << ',' << format_double(trace.amp_r[i].imag()) << ','
            << format_double(trace.concurrence_sr[i]) << ','
            << format_double(trace.population_leak[i]) << '\n';
}

}  // namespace xychain
