#include "claimsim/revisions.hpp"

#include "claimsim/errors.hpp"

#include <algorithm>
#include <cmath>

namespace claimsim {

bool is_payment(EventKind k) {
    return k == EventKind::Payment || k == EventKind::PaymentMajor || k == EventKind::PaymentMinor;
}

bool is_major(EventKind k) {
    return k == EventKind::Major || k == EventKind::PaymentMajor;
}

bool is_minor(EventKind k) {
    return k == EventKind::Minor || k == EventKind::PaymentMinor;
}

int sample_major_count(const MajorRevisionConfig& cfg, double size, int n_payments,
                       RngStream& rng) {
    const double u = rng.uniform01(); // always consume, for stable draw counts
    if (size <= cfg.size_threshold || n_payments < cfg.min_payments) {
        return 1;
    }
    const double reach = std::min(1.0, std::max(0.0, (size - cfg.size_threshold) / cfg.size_span));
    const double p2 = cfg.p2_base + cfg.p2_slope * reach;
    const double p3 = cfg.p3_slope * reach;
    if (u < p2) {
        return 2;
    }
    if (u < p2 + p3) {
        return 3;
    }
    return 1;
}

std::vector<double> sample_major_factors(const MajorRevisionConfig& cfg, int count,
                                         RngStream& rng) {
    std::vector<double> factors;
    if (count < 2) {
        return factors;
    }
    const double g2 = std::exp(rng.normal(cfg.factor2_log_mean, cfg.factor_log_sd));
    factors.push_back(g2);
    if (count >= 3) {
        const double mu = cfg.factor3_base + cfg.factor3_slope * (cfg.factor3_anchor - g2);
        factors.push_back(std::exp(rng.normal(mu, cfg.factor_log_sd)));
    }
    return factors;
}

double sample_minor_factor(const MinorRevisionConfig& cfg, double w, double tau,
                           bool after_major, RngStream& rng) {
    double mu;
    if (tau <= w / 3.0) {
        mu = cfg.mu_early;
    } else if (tau <= 2.0 * w / 3.0) {
        mu = cfg.mu_mid;
    } else {
        mu = cfg.mu_late;
    }
    const double sd = after_major ? cfg.sd_after_major : cfg.sd_default;
    return std::exp(rng.normal(mu, sd));
}

namespace {

// Sample the epochs of the post-notification majors. Returns strictly
// increasing taus in (0, w); when `at_penultimate` the last major is pinned
// to the second-to-last payment epoch.
struct MajorSchedule {
    std::vector<double> taus;
    bool at_penultimate = false;
};

MajorSchedule sample_major_epochs(const MajorRevisionConfig& cfg, int count, double w,
                                  double penultimate_tau, double size,
                                  const std::vector<double>& payment_taus, RngStream& rng) {
    MajorSchedule sched;
    const int extra = count - 1;
    if (extra <= 0) {
        return sched;
    }
    const double reach =
        std::min(1.0, std::max(0.0, (size - cfg.coincidence_threshold) / cfg.coincidence_span));
    const double p_coincide = cfg.coincidence_base * reach;
    sched.at_penultimate = payment_taus.size() >= 2 && rng.bernoulli(p_coincide);

    auto collides = [&](double tau) {
        if (sched.at_penultimate && tau >= penultimate_tau) {
            return true; // free majors must precede the pinned one
        }
        return std::binary_search(payment_taus.begin(), payment_taus.end(), tau);
    };

    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<double> taus;
        if (sched.at_penultimate) {
            for (int j = 0; j < extra - 1; ++j) {
                taus.push_back(rng.triangular(penultimate_tau / 3.0, penultimate_tau / 3.0,
                                              penultimate_tau));
            }
            taus.push_back(penultimate_tau);
        } else {
            for (int j = 0; j < extra; ++j) {
                taus.push_back(rng.triangular(w / 3.0, w / 3.0, w));
            }
        }
        std::sort(taus.begin(), taus.end());
        bool ok = true;
        for (std::size_t j = 0; ok && j < taus.size(); ++j) {
            if (j + 1 < taus.size() && !(taus[j] < taus[j + 1])) {
                ok = false; // ties between majors: resample
            }
            const bool pinned = sched.at_penultimate && j + 1 == taus.size();
            if (ok && !pinned && collides(taus[j])) {
                ok = false; // exact collision with a payment epoch: resample
            }
            if (ok && !(taus[j] > 0.0 && taus[j] <= w)) {
                ok = false;
            }
        }
        if (ok) {
            sched.taus = std::move(taus);
            return sched;
        }
    }
    throw DataError("could not place major revision epochs without collisions");
}

} // namespace

Timeline build_timeline(const SimulationConfig& cfg, const ClaimRecord& claim) {
    const int period = claim.occurrence_period;
    const int index = claim.index_in_period;
    const double w = claim.settlement_delay;
    const int m = claim.n_payments();
    const std::vector<double>& pay_taus = claim.payment_delays;

    Timeline timeline;

    // --- majors ---------------------------------------------------------
    MajorSchedule majors;
    {
        RngStream rng(cfg.master_seed, claim_scope(period, index, "majors"));
        timeline.major_count = sample_major_count(cfg.major, claim.size, m, rng);
        const double penult_tau = m >= 2 ? pay_taus[static_cast<std::size_t>(m - 2)] : 0.0;
        majors = sample_major_epochs(cfg.major, timeline.major_count, w, penult_tau, claim.size,
                                     pay_taus, rng);
    }
    std::vector<double> major_factors;
    {
        RngStream rng(cfg.master_seed, claim_scope(period, index, "major-factors"));
        major_factors = sample_major_factors(cfg.major, timeline.major_count, rng);
    }
    timeline.major_at_penultimate = majors.at_penultimate;

    // --- minors: epochs first, factors later (chronologically) ----------
    std::vector<char> minor_at_payment(static_cast<std::size_t>(m), 0);
    std::vector<double> free_minor_taus;
    {
        RngStream rng(cfg.master_seed, claim_scope(period, index, "minors"));
        MinorRevisionConfig mn = cfg.minor;
        for (int j = 0; j < m - 1; ++j) { // the settling payment carries no revision
            minor_at_payment[static_cast<std::size_t>(j)] = rng.bernoulli(mn.at_payment_prob) ? 1 : 0;
        }
        const double mean = std::min(mn.free_mean_cap, w / mn.free_mean_divisor);
        const long n_free = rng.geometric_mean(mean);
        for (long j = 0; j < n_free; ++j) {
            free_minor_taus.push_back(rng.uniform(w / mn.epoch_min_divisor, w));
        }
        std::sort(free_minor_taus.begin(), free_minor_taus.end());
    }

    // --- assemble the schedule ------------------------------------------
    std::vector<TimelineEvent> events;
    events.push_back(TimelineEvent{0.0, EventKind::Major, -1, 1.0}); // notification estimate

    const std::size_t pinned_major =
        majors.at_penultimate ? majors.taus.size() - 1 : static_cast<std::size_t>(-1);
    for (std::size_t j = 0; j < majors.taus.size(); ++j) {
        if (j == pinned_major) {
            continue; // emitted as PaymentMajor below
        }
        events.push_back(TimelineEvent{majors.taus[j], EventKind::Major, -1,
                                       major_factors[j]});
    }

    for (int j = 0; j < m; ++j) {
        const double tau = pay_taus[static_cast<std::size_t>(j)];
        EventKind kind = EventKind::Payment;
        double factor = 1.0;
        if (majors.at_penultimate && j == m - 2) {
            kind = EventKind::PaymentMajor;
            factor = major_factors.back();
            if (minor_at_payment[static_cast<std::size_t>(j)]) {
                ++timeline.discarded_minors; // major takes precedence
            }
        } else if (minor_at_payment[static_cast<std::size_t>(j)]) {
            kind = EventKind::PaymentMinor;
            // factor filled in chronologically below
        }
        events.push_back(TimelineEvent{tau, kind, j, factor});
    }

    for (double tau : free_minor_taus) {
        bool collision = false;
        for (const TimelineEvent& ev : events) {
            if (ev.tau == tau) {
                collision = true;
                break;
            }
        }
        if (collision) {
            ++timeline.discarded_minors;
            continue;
        }
        events.push_back(TimelineEvent{tau, EventKind::Minor, -1, 1.0});
    }

    std::sort(events.begin(), events.end(), [](const TimelineEvent& a, const TimelineEvent& b) {
        return a.tau < b.tau;
    });

    // --- minor factors, drawn in event order ----------------------------
    {
        RngStream rng(cfg.master_seed, claim_scope(period, index, "minor-factors"));
        double first_major_tau = -1.0;
        for (const TimelineEvent& ev : events) {
            if (ev.tau > 0.0 && is_major(ev.kind)) {
                first_major_tau = ev.tau;
                break;
            }
        }
        for (TimelineEvent& ev : events) {
            if (is_minor(ev.kind)) {
                const bool after_major = first_major_tau >= 0.0 && ev.tau > first_major_tau;
                ev.factor = sample_minor_factor(cfg.minor, w, ev.tau, after_major, rng);
            }
        }
    }

    for (std::size_t j = 1; j < events.size(); ++j) {
        if (!(events[j].tau > events[j - 1].tau)) {
            throw DataError("timeline events must be strictly increasing in time");
        }
    }
    if (events.back().payment_index != m - 1 || !is_payment(events.back().kind)) {
        throw DataError("a claim's last transaction must be its settling payment");
    }
    timeline.events = std::move(events);
    return timeline;
}

} // namespace claimsim
