// SPDX-License-Identifier: Apache-2.0
//
// pointdata: a toolkit for pooled site-specific radio channel statistics
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pointdata {

// Propagation condition of one measured link. OUTAGE rows carry identity and
// distance only; every measurement column must be absent.
enum class LinkState { Los, Nlos, Outage };

std::string_view to_string(LinkState state);
std::optional<LinkState> parse_link_state(std::string_view text); // case-insensitive

// 3GPP environment class of a campaign. Names outside the three standard
// classes are preserved verbatim as Other.
struct Environment {
    enum class Kind { InH, InF, UMi, Other };

    Kind kind = Kind::InH;
    std::string other_name{}; // used only when kind == Other

    std::string str() const;
    static Environment from_string(std::string_view text);

    bool operator==(const Environment&) const = default;
};

// Power-delay-profile noise threshold: a tap survives when it is at or above
// the greater of (peak - rel_below_peak_db) and (noise + abs_above_noise_db).
struct ThresholdPolicy {
    double rel_below_peak_db = 25.0;
    double abs_above_noise_db = 5.0;

    bool operator==(const ThresholdPolicy&) const = default;
};

// One row of a point-data table: a single (frequency, TX, RX) link with its
// large-scale parameters. Absent measurements stay absent; no sentinels.
//
// Units: GHz, meters, dB, nanoseconds, degrees.
struct PointRecord {
    double frequency_ghz = 0.0;
    std::string tx_id;
    std::string rx_id;
    LinkState link_state = LinkState::Los;
    double tr_separation_m = 0.0; // straight-line (Euclidean) TX-RX distance

    std::optional<double> omni_pl_vv_db;     // absolute omni path loss, co-polarized
    std::optional<double> omni_pl_vh_db;     // absolute omni path loss, cross-polarized
    std::optional<double> mean_dir_ds_ns;    // mean of directional RMS delay spreads
    std::optional<double> omni_ds_ns;        // omnidirectional RMS delay spread
    std::optional<double> mean_lobe_asa_deg; // log-mean of per-lobe azimuth spreads, arrival
    std::optional<double> omni_asa_deg;
    std::optional<double> mean_lobe_asd_deg; // same, departure
    std::optional<double> omni_asd_deg;
    std::optional<double> mean_lobe_zsa_deg; // log-mean of per-lobe zenith spreads, arrival
    std::optional<double> omni_zsa_deg;
    std::optional<double> mean_lobe_zsd_deg; // same, departure
    std::optional<double> omni_zsd_deg;

    bool operator==(const PointRecord&) const = default;
};

// Contributor identity plus the measurement/processing spec that governs
// pooling compatibility (bandwidth, beamwidths, threshold policy).
struct CampaignMetadata {
    std::string contributor;
    Environment environment;
    double bandwidth_mhz = 0.0;
    double tx_hpbw_deg = 0.0;
    double rx_hpbw_deg = 0.0;
    double tx_gain_dbi = 0.0;
    double rx_gain_dbi = 0.0;
    ThresholdPolicy threshold;
    std::optional<std::string> map_ref;
    std::optional<std::string> date_range;

    bool operator==(const CampaignMetadata&) const = default;
};

// A named invariant violation. Violations are data, not failures: validation
// reports every broken rule instead of throwing on the first.
struct Violation {
    std::string field;
    std::string rule;

    bool operator==(const Violation&) const = default;
};

// Checks every PointRecord invariant: positive frequency and separation,
// non-empty ids, path losses at or above the free-space floor at 1 m for the
// record's own frequency, finite non-negative spreads, and OUTAGE rows with
// all measurement fields absent. Pure: same record, same violation list.
std::vector<Violation> validate_record(const PointRecord& record);

// bandwidth_mhz > 0, beamwidths in (0, 360], threshold fields > 0.
std::vector<Violation> validate_metadata(const CampaignMetadata& metadata);

struct ProvenanceEntry {
    std::string source_id;
    std::size_t record_count = 0;

    bool operator==(const ProvenanceEntry&) const = default;
};

// A validated, immutable collection of point records. Construction enforces
// record invariants and (contributor, frequency, tx, rx) key uniqueness;
// multi-source datasets track per-source contributors through contiguous
// provenance segments.
class Dataset {
  public:
    // Single-source dataset; provenance becomes one entry for the contributor.
    Dataset(CampaignMetadata metadata, std::vector<PointRecord> records);

    // Pooled dataset: records are the concatenation of the provenance
    // segments, in order. Counts must sum to records.size().
    Dataset(CampaignMetadata metadata, std::vector<PointRecord> records,
            std::vector<ProvenanceEntry> provenance);

    const CampaignMetadata& metadata() const noexcept { return metadata_; }
    const std::vector<PointRecord>& records() const noexcept { return records_; }
    const std::vector<ProvenanceEntry>& provenance() const noexcept { return provenance_; }

    std::size_t size() const noexcept { return records_.size(); }

    // Contributor that supplied record `index`, resolved from the provenance
    // segmentation.
    const std::string& contributor_of(std::size_t index) const;

    bool operator==(const Dataset&) const = default;

  private:
    void enforce_invariants() const;

    CampaignMetadata metadata_;
    std::vector<PointRecord> records_;
    std::vector<ProvenanceEntry> provenance_;
};

// Schema registry for the numeric table columns (tr_sep_m plus the twelve
// measurement columns). Drives header I/O and the parameter selectors used
// by summaries and CDFs.
struct FieldInfo {
    std::string_view name;                             // canonical column name
    std::optional<double> (*get)(const PointRecord&);  // value when present
    bool is_measurement;                               // must be absent on OUTAGE rows
};

std::span<const FieldInfo> numeric_fields();
const FieldInfo* find_numeric_field(std::string_view name); // nullptr when unknown

} // namespace pointdata
