// Copyright 2026 The oadeval Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OAD_ANNOTATIONS_HPP_
#define OAD_ANNOTATIONS_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace oad {

enum class Split { kTrain, kValidation, kTest };

std::string_view to_string(Split split);
std::optional<Split> split_from_string(std::string_view text);

// Ordered list of class names. The position of a name is its class id, and
// every report iterates classes in this order.
class ClassCatalog {
 public:
  ClassCatalog() = default;
  // Throws kValidation on duplicate names.
  explicit ClassCatalog(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  bool empty() const { return names_.empty(); }
  const std::string& name(int class_id) const;
  std::optional<int> id_of(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

// The twelve per-instance annotation flags. Keep in sync with
// meta_flag_key(); serialized keys use these exact spellings.
enum class MetaFlag : int {
  kAtypical = 0,
  kMultiplePersons,
  kSmallOrBackground,
  kSideViewpoint,
  kFrontalViewpoint,
  kSpecialViewpoint,
  kMovingCamera,
  kShotcut,
  kOcclusion,
  kSpatialTruncation,
  kTruncatedStart,
  kTruncatedEnd,
};

inline constexpr int kNumMetaFlags = 12;

std::string_view meta_flag_key(MetaFlag flag);
std::optional<MetaFlag> meta_flag_from_key(std::string_view key);

// Optional annotation metadata; absent entries mean "unannotated".
struct MetadataFlags {
  std::array<std::optional<bool>, kNumMetaFlags> booleans;
  std::optional<int> length_quartile;  // 1..4
  std::optional<int> motion_quartile;  // 1..4

  std::optional<bool>& flag(MetaFlag f) { return booleans[static_cast<int>(f)]; }
  const std::optional<bool>& flag(MetaFlag f) const {
    return booleans[static_cast<int>(f)];
  }
  bool any_set() const;
  bool operator==(const MetadataFlags&) const = default;
};

// One temporal action annotation. Frame spans are inclusive on both ends;
// duration = end_frame - start_frame + 1.
struct ActionInstance {
  std::string video_id;
  int class_id = 0;
  std::int64_t start_frame = 0;
  std::int64_t end_frame = 0;
  MetadataFlags flags;

  std::int64_t duration() const { return end_frame - start_frame + 1; }
};

struct VideoAnnotation {
  std::string video_id;
  std::int64_t num_frames = 0;
  double fps = 25.0;
  std::string series;
  Split split = Split::kTest;
};

// Instances of the same class in the same video may overlap; the positive
// label of a frame is the union over covering instances.
struct Dataset {
  ClassCatalog catalog;
  std::map<std::string, VideoAnnotation> videos;  // keyed by video_id
  std::vector<ActionInstance> instances;          // file order preserved

  const VideoAnnotation* find_video(std::string_view video_id) const;
};

struct Violation {
  std::string where;    // offending record, e.g. "instance #3" or "video ep01"
  std::string message;  // what is wrong with it
};

struct ParseResult {
  Dataset dataset;
  std::vector<Violation> violations;
};

// Annotation file format (UTF-8, line oriented, '\n' endings, whole-line '#'
// comments, blank lines ignored):
//
//   [videos]      video_id,num_frames,fps,series,split
//   [classes]     one class name per line; line order defines class ids
//   [instances]   video_id,class_name,start_frame,end_frame[,flags]
//
// flags is a semicolon-joined list of key=0|1 for the twelve booleans plus
// length_q=n / motion_q=n; absent keys mean "unannotated". Fields must not
// contain ',', ';', '=', '#' or newlines. Frame indices are 0-based.
//
// parse_dataset throws on the first syntax, reference, or invariant problem.
// parse_dataset_lenient throws only on syntax errors and collects reference
// and invariant problems as Violations (offending instances are kept so the
// caller can report them; offending records that cannot be represented, such
// as an instance naming an unknown class, are skipped).
Dataset parse_dataset(std::istream& in);
ParseResult parse_dataset_lenient(std::istream& in);

// Byte-deterministic inverse of parse_dataset: fixed section and field order,
// videos sorted by id, '\n' endings. parse(serialize(ds)) == ds for any valid
// dataset.
void serialize_dataset(const Dataset& ds, std::ostream& out);
std::string serialize_dataset(const Dataset& ds);

// Invariant check over an in-memory dataset; empty result iff all invariants
// hold. Violations are data, not errors.
std::vector<Violation> validate(const Dataset& ds);

using FrameMask = std::vector<std::uint8_t>;

// Per-frame ground truth for (video, class): mask[t] == 1 iff frame t lies
// inside at least one instance of the class. Throws kReference on unknown
// video or class.
FrameMask frame_labels(const Dataset& ds, std::string_view video_id,
                       int class_id);

// Which tenth of the instance a frame falls in: floor(10 * offset / duration)
// clamped to 9. Throws kDomain if the frame is outside the instance.
int decile_index(const ActionInstance& instance, std::int64_t frame);

enum class QuartileScope { kPerClass, kGlobal };

// Partition instances into duration quartiles (1 = shortest .. 4 = longest).
// Thresholds are nearest-rank percentiles (the ceil(q*n)-th order statistic
// at q = .25/.50/.75); values equal to a threshold take the lower quartile.
// Classes with no instances are skipped.
Dataset compute_length_quartiles(Dataset ds,
                                 QuartileScope scope = QuartileScope::kPerClass);

// Same partition applied to externally supplied per-instance motion counts;
// counts[i] belongs to ds.instances[i]. Throws kReference if the count
// sequence does not cover every instance, kValidation on negative counts.
Dataset ingest_motion_counts(Dataset ds, std::span<const std::int64_t> counts,
                             QuartileScope scope = QuartileScope::kPerClass);

struct ClassStats {
  int class_id = 0;
  std::int64_t instance_count = 0;
  std::int64_t positive_frames = 0;  // union over overlapping instances
  std::optional<double> prevalence;  // positive_frames / filtered_frames
};

struct DatasetStats {
  std::vector<ClassStats> per_class;  // catalog order
  std::int64_t total_videos = 0;      // whole dataset, ignoring the filter
  std::int64_t total_frames = 0;
  std::int64_t total_instances = 0;
  double total_hours = 0.0;
  std::optional<Split> split;           // the filter that was applied
  std::int64_t filtered_videos = 0;     // videos matching the filter
  std::int64_t filtered_frames = 0;     // prevalence denominator
  std::int64_t filtered_instances = 0;
};

// Per-class counts and prevalence over the videos matching `split`
// (std::nullopt = all videos), plus dataset-wide totals. Prevalence is the
// expected average precision of a uniform-random detector for that class.
DatasetStats dataset_stats(const Dataset& ds,
                           std::optional<Split> split = std::nullopt);

}  // namespace oad

#endif  // OAD_ANNOTATIONS_HPP_
