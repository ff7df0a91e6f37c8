#pragma once

#include "claimsim/config.hpp"
#include "claimsim/paid_loss.hpp"
#include "claimsim/rng.hpp"

#include <vector>

namespace claimsim {

/// Transaction kinds, in the order they are compared when events share an
/// epoch (which never happens: coincident revision+payment collapse into the
/// combined kinds below).
enum class EventKind {
    Payment,       // P   : partial payment only
    Major,         // Ma  : major revision only
    Minor,         // Mi  : minor revision only
    PaymentMajor,  // PMa : major revision together with a payment
    PaymentMinor,  // PMi : minor revision together with a payment
};

bool is_payment(EventKind k);
bool is_major(EventKind k);
bool is_minor(EventKind k);

/// One scheduled event, `tau` periods after notification.
struct TimelineEvent {
    double tau = 0.0;
    EventKind kind = EventKind::Payment;
    int payment_index = -1;    // >= 0 for payment-carrying events
    double factor = 1.0;       // sampled revision multiplier (1 for pure payments)
};

/// A claim's full transaction schedule: strictly increasing in tau, starting
/// with the notification estimate (a Major with tau == 0 and factor 1) and
/// ending with the settling payment.
struct Timeline {
    std::vector<TimelineEvent> events;
    int major_count = 1;        // K in {1,2,3}
    bool major_at_penultimate = false;
    int discarded_minors = 0;   // minors dropped due to collisions
};

/// Number of major revisions for a claim of the given size and payment count.
int sample_major_count(const MajorRevisionConfig& cfg, double size, int n_payments,
                       RngStream& rng);

/// Post-notification major revision multipliers g_2 (and g_3 when count==3).
/// Returned vector has length max(0, count - 1).
std::vector<double> sample_major_factors(const MajorRevisionConfig& cfg, int count,
                                         RngStream& rng);

/// Minor revision multiplier at time tau within a claim of settlement delay
/// w; `after_major` marks whether a post-notification major has already
/// happened by tau.
double sample_minor_factor(const MinorRevisionConfig& cfg, double w, double tau,
                           bool after_major, RngStream& rng);

/// Assemble the full schedule for one simulated claim. Draws from the
/// streams "majors", "major-factors", "minors" and "minor-factors" of the
/// claim's scope; deterministic in (cfg.master_seed, claim identity).
Timeline build_timeline(const SimulationConfig& cfg, const ClaimRecord& claim);

} // namespace claimsim
