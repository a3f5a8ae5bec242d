#include "wps/volume.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <thread>

#include "wps/errors.hpp"

namespace wps {

UnitLatticeFrame make_frame(int r1, int r2, double regulator)
{
    require(regulator > 0, "regulator must be positive");
    UnitLatticeFrame f;
    f.r1 = r1;
    f.r2 = r2;
    f.regulator = regulator;
    if (r1 == 1 && r2 == 0) {
        f.place_degrees = {1};
    } else if (r1 == 0 && r2 == 1) {
        f.place_degrees = {2};
    } else if (r1 == 2 && r2 == 0) {
        f.place_degrees = {1, 1};
        f.unit_logs = {{regulator, -regulator}};
        f.dual = {{1.0 / (2 * regulator), -1.0 / (2 * regulator)}};
    } else {
        throw input_error("unsupported unit-lattice frame (supported "
                          "signatures: r1=1 r2=0, r1=0 r2=1, r1=2 r2=0)");
    }
    // dual/basis pairing and projection sanity
    for (size_t j = 0; j < f.dual.size(); ++j) {
        for (size_t k = 0; k < f.unit_logs.size(); ++k) {
            double pairing = 0;
            for (size_t v = 0; v < f.place_degrees.size(); ++v)
                pairing += f.dual[j][v] * f.unit_logs[k][v];
            double want = j == k ? 1.0 : 0.0;
            invariant(std::fabs(pairing - want) <= 1e-12,
                      "unit-lattice dual basis mismatch");
        }
    }
    return f;
}

double fundamental_domain_volume(int r1, int r2, double regulator,
                                 Weight const & W)
{
    require(r1 + r2 >= 1, "need at least one archimedean place");
    require(regulator > 0, "regulator must be positive");
    int m = W.size();
    return std::pow(2.0, m * r1) * std::pow(std::numbers::pi, m * r2) *
           regulator *
           std::pow(static_cast<double>(W.total()), r1 + r2 - 1);
}

namespace {

constexpr unsigned long long kChunk = 1 << 16;

double unit_double(std::mt19937_64 & rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53; // [0,1)
}

} // namespace

McEstimate monte_carlo_volume(UnitLatticeFrame const & frame, Weight const & W,
                              unsigned long long samples, std::uint64_t seed,
                              int threads)
{
    require(samples >= 10'000, "need at least 10^4 samples");
    require(frame.rank() <= 1, "unsupported unit rank");
    int m = W.size();
    size_t places = frame.place_degrees.size();

    std::vector<double> cap(m);
    double box_volume = 1;
    for (int i = 0; i < m; ++i) {
        cap[i] = frame.rank() == 0 ? 1.0
                                   : std::exp(frame.regulator * W[i]);
        for (size_t v = 0; v < places; ++v)
            box_volume *= std::pow(2 * cap[i], frame.place_degrees[v]);
    }
    int N = frame.degree();

    auto run_chunk = [&](std::uint64_t chunk_index,
                         unsigned long long n) -> unsigned long long {
        std::mt19937_64 rng(
            splitmix64(seed + 0x9e3779b97f4a7c15ULL * (chunk_index + 1)));
        unsigned long long hits = 0;
        std::vector<double> eta(places);
        for (unsigned long long s = 0; s < n; ++s) {
            bool ok = true;
            double log_prod = 0;
            for (size_t v = 0; v < places && ok; ++v) {
                double best = 0; // max_i |Z_{v,i}|_v^{1/w_i}
                for (int i = 0; i < m; ++i) {
                    double zv;
                    if (frame.place_degrees[v] == 1) {
                        double z = (2 * unit_double(rng) - 1) * cap[i];
                        zv = std::fabs(z);
                    } else {
                        double re = (2 * unit_double(rng) - 1) * cap[i];
                        double im = (2 * unit_double(rng) - 1) * cap[i];
                        zv = re * re + im * im; // normalized complex norm
                    }
                    double val = std::pow(zv, 1.0 / W[i]);
                    if (val > best)
                        best = val;
                }
                if (best <= 0) {
                    ok = false;
                    break;
                }
                eta[v] = std::log(best);
                log_prod += eta[v];
            }
            if (!ok || log_prod > 0)
                continue;
            if (frame.rank() == 1) {
                double mean = 0;
                for (size_t v = 0; v < places; ++v)
                    mean += eta[v];
                mean /= N;
                bool in_domain = true;
                for (auto const & du : frame.dual) {
                    double xi = 0;
                    for (size_t v = 0; v < places; ++v)
                        xi += du[v] *
                              (eta[v] - mean * frame.place_degrees[v]);
                    if (xi < 0 || xi >= 1) {
                        in_domain = false;
                        break;
                    }
                }
                if (!in_domain)
                    continue;
            }
            ++hits;
        }
        return hits;
    };

    unsigned long long chunks = (samples + kChunk - 1) / kChunk;
    int workers = threads > 0
                      ? threads
                      : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<unsigned long long>> futs;
    unsigned long long hits = 0;
    for (unsigned long long base = 0; base < chunks;
         base += static_cast<unsigned long long>(workers)) {
        futs.clear();
        unsigned long long top = std::min(
            chunks, base + static_cast<unsigned long long>(workers));
        for (unsigned long long c = base; c < top; ++c) {
            unsigned long long n =
                std::min(kChunk, samples - c * kChunk);
            futs.push_back(std::async(std::launch::async, run_chunk, c, n));
        }
        for (auto & f : futs)
            hits += f.get();
    }

    double p = static_cast<double>(hits) / static_cast<double>(samples);
    McEstimate est;
    est.samples = samples;
    est.hits = hits;
    est.value = box_volume * p;
    est.std_error =
        box_volume * std::sqrt(p * (1 - p) / static_cast<double>(samples));
    return est;
}

} // namespace wps
