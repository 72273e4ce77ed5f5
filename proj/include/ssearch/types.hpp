// Domain types: markets, search sequences, censored observations, and the
// latent value vectors the search policy acts on.
//
// Conventions used everywhere:
//   - product ids are contiguous 1..M; kOutside (= 0) denotes the outside
//     option wherever a product id is expected;
//   - vectors indexed by product are laid out in product-id order, so
//     values.z[j - 1] is the reservation value of product j;
//   - route ids are contiguous 1..R in the discovery model, 0 otherwise.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssearch {

inline constexpr int kOutside = 0;

struct Product {
    int id = 0;
    double x[3] = {0.0, 0.0, 0.0};
    double price = 0.0;
    int route_id = 0;
};

struct Market {
    std::vector<Product> products;  // sorted by id, ids 1..size()
    bool has_outside = false;

    int n_products() const { return static_cast<int>(products.size()); }

    const Product& product(int id) const { return products.at(static_cast<std::size_t>(id - 1)); }

    int n_routes() const {
        int r = 0;
        for (const auto& p : products) r = p.route_id > r ? p.route_id : r;
        return r;
    }

    // Throws if ids are not contiguous from 1 or attributes are not finite.
    void validate() const;
};

// A full search record: inspections in order, then one purchase.
struct SequenceObservation {
    Market market;
    std::vector<int> inspected;  // product ids, inspection order
    int purchased = kOutside;    // product id, or kOutside

    int n_inspected() const { return static_cast<int>(inspected.size()); }

    // 1-based inspection position of the purchased product; 0 when the
    // outside option was purchased.
    int purchase_position() const;

    bool was_inspected(int product_id) const;

    void validate() const;
};

enum class ObsKind {
    FullPath,
    PurchaseOnly,
    SearchedSet,
    FirstAndPurchase,
    SubsetPath,
    DiscoveryLog,
};

std::string to_string(ObsKind kind);
ObsKind obs_kind_from_string(const std::string& s);

// One step of a discovery-model action log.
struct DiscoveryAction {
    enum class Type { Discover, Inspect, Purchase };
    Type type = Type::Inspect;
    int route_id = 0;           // Discover only
    std::vector<int> revealed;  // Discover only: product ids revealed (as a set)
    int target = kOutside;      // Inspect/Purchase: product id (or kOutside)
};

struct DiscoverySequence {
    Market market;
    std::vector<int> initial_visible;  // product ids visible before any discovery
    std::vector<DiscoveryAction> actions;

    void validate() const;
};

// A possibly censored view of a consumer's search. Payload fields are
// meaningful per kind; unused ones stay empty.
struct ObservedData {
    ObsKind kind = ObsKind::FullPath;
    Market market;

    // FullPath: inspection order. SearchedSet: the set, sorted ascending.
    // FirstAndPurchase: {first inspected} or empty. SubsetPath: inspection
    // order restricted to observable products.
    std::vector<int> inspected;
    int purchased = kOutside;
    bool purchase_observed = true;  // false for SubsetPath
    std::vector<int> observable;    // SubsetPath: sorted observable ids

    DiscoverySequence discovery;  // DiscoveryLog only

    void validate() const;
};

// Payload equality for two views over the same market (used by the
// frequency oracle to count matching simulations).
bool same_view(const ObservedData& a, const ObservedData& b);

// Latent values of every action available to one consumer.
struct ValueVector {
    std::vector<double> z;  // reservation values, z[j-1] for product j
    std::vector<double> u;  // purchase values, u[j-1] for product j
    double u_outside = 0.0;
    // Discovery values q[r-1][t-1]: route r's t-th discovery (t = 1,2,..).
    std::vector<std::vector<double>> q;

    void validate(const Market& market) const;
};

}  // namespace ssearch
