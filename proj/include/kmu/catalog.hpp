#pragma once

#include <map>
#include <optional>
#include <set>

#include "kmu/invariants.hpp"
#include "kmu/json_io.hpp"

namespace kmu {

// A family of (possibly singular) Calabi-Yau threefolds known to the web.
// Families named by the tables without usable equations (linear sections of
// the larger homogeneous spaces) carry no spec.
struct FamilyRecord {
    std::string key;
    std::vector<std::string> names;
    std::optional<VarietySpec> spec;
    InvariantSet invariants;
    std::string provenance;
    std::vector<std::string> annotations;
};

struct TransitionEdge {
    std::string source;  // family keys
    std::string target;
    long long d = 0;     // degree of the contracted del Pezzo
    std::string mechanism;  // codim2 | codim3 | pfaffian-extension | tom | jerry | cascade | candidate
    std::string provenance;
    bool verified = false;
};

struct Codim2Row {
    int id = 0;
    AmbientSpace T;
    std::vector<long long> D, X, Y;                         // beyond the shared constraints
    std::vector<long long> d_printed, x_printed, y_printed;  // subscripts as printed
    std::vector<int> y_ambient;
    std::map<std::string, std::string> names;
    std::vector<std::string> annotations;
    std::optional<int> duplicate_of;
};

struct Codim3Row {
    int id = 0;
    AmbientSpace T;
    std::vector<long long> D, X;
    std::vector<int> y_profile;  // doubled row weights
    std::vector<int> y_ambient;
    std::map<std::string, std::string> names;
    std::optional<InvariantSet> y_invariants;
    std::vector<std::string> annotations;
};

struct TomJerryRow {
    int id = 0;
    AmbientSpace T;
    std::vector<long long> D;
    std::map<std::string, std::string> names;
    long long segre_degree = 6;
};

struct CascadeRow {
    int id = 0;
    InvariantSet invariants;
    std::string description;
    std::optional<VarietySpec> spec;  // rows 1-4 and the G(2,5) section
};

class Catalog {
public:
    // reads the four table files from the data directory (default: the
    // KMU_DATA_DIR the build points at, overridable by the environment
    // variable of the same name)
    static Catalog load(std::string data_dir = "");
    static std::string default_data_dir();

    const std::vector<Codim2Row>& codim2() const { return codim2_; }
    const std::vector<Codim3Row>& codim3() const { return codim3_; }
    const std::vector<TomJerryRow>& tomjerry() const { return tomjerry_; }
    const std::vector<CascadeRow>& cascade() const { return cascade_; }
    long long cascade_step_degree() const { return cascade_step_degree_; }

    const std::vector<FamilyRecord>& families() const { return families_; }
    const std::vector<TransitionEdge>& edges() const { return edges_; }
    const FamilyRecord* family(const std::string& key_or_name) const;

private:
    std::vector<Codim2Row> codim2_;
    std::vector<Codim3Row> codim3_;
    std::vector<TomJerryRow> tomjerry_;
    std::vector<CascadeRow> cascade_;
    long long cascade_step_degree_ = 4;

    std::vector<FamilyRecord> families_;
    std::vector<TransitionEdge> edges_;

    void build_families_and_edges();
    std::size_t family_for(const VarietySpec& spec, const std::string& name, const std::string& provenance);
    std::size_t named_family(const std::string& name, const std::string& provenance);
};

// canonical dedup key of a spec'd family: sorted weights, sorted full degree
// list (constraint hypersurfaces included), Pfaffian sheet count and profile
std::string family_key(const VarietySpec& spec);

// specs of the row members; the Y specs are computed from the construction
// (reproduce_tables checks them against the printed columns)
VarietySpec codim2_x_spec(const Codim2Row& r);
VarietySpec codim2_d_spec(const Codim2Row& r);
VarietySpec codim2_y_spec(const Codim2Row& r);
VarietySpec codim3_x_spec(const Codim3Row& r);
VarietySpec codim3_d_spec(const Codim3Row& r);
VarietySpec codim3_y_spec(const Codim3Row& r);
VarietySpec tomjerry_x_spec(const TomJerryRow& r);
VarietySpec tomjerry_d_spec(const TomJerryRow& r);
VarietySpec tomjerry_target_spec(const TomJerryRow& r, bool tom);

// --- candidate search --------------------------------------------------------
struct Candidate {
    std::string family_key;
    long long d = 0;
    TransitionDirection direction = TransitionDirection::unproject;
};

// degree-8 del Pezzos are excluded by default: the invariant arithmetic
// cannot tell P1xP1 from F_1, whose cone does not smooth
const std::set<long long>& default_allowed_degrees();

std::vector<Candidate> candidates(const Catalog& cat, const FamilyRecord& from,
                                  const std::set<long long>& allowed = default_allowed_degrees());

// --- the transition web -------------------------------------------------------
struct WebGraph {
    struct Node {
        std::string key;
        std::vector<std::string> names;
        InvariantSet invariants;
        bool has_spec = false;
    };
    std::vector<Node> nodes;           // sorted by key
    std::vector<TransitionEdge> edges;  // sorted (source, target, d, mechanism)
};

WebGraph build_web(const Catalog& cat, bool include_candidate_edges = true,
                   const std::set<long long>& allowed = default_allowed_degrees());

// Run the constructor checks behind each shipped edge at one seed (codim-2
// identity, Pfaffian-extension identity, Tom/Jerry containment; cascade
// edges are pure invariant arithmetic) and mark the edges that pass.
WebGraph verify_web(const Catalog& cat, WebGraph g, std::uint64_t seed);

std::string export_dot(const WebGraph& g);
Json export_web_json(const WebGraph& g);
WebGraph import_web_json(const Json& j);
int connected_components(const WebGraph& g);

// --- table reproduction --------------------------------------------------------
struct RowCheck {
    std::string table;
    int row = 0;
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> infos;
};

struct TableReport {
    std::vector<RowCheck> rows;
    std::vector<std::string> duplicate_flags;
    std::vector<std::string> discrepancy_flags;
    bool all_rows_pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
    Json to_json() const;
};

// per-row ambient/degree/weight bookkeeping and invariant cross-checks
TableReport reproduce_tables(const Catalog& cat);

}  // namespace kmu
