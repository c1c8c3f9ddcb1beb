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

#ifndef OAD_METRICS_HPP_
#define OAD_METRICS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oad/annotations.hpp"
#include "oad/scores.hpp"

namespace oad {

// One frame in a confidence ranking. Provenance (video_id, frame) breaks the
// remaining ties so the full order is deterministic.
struct RankedFrame {
  double score = 0.0;
  bool is_positive = false;
  std::string video_id;
  std::int64_t frame = 0;
};

// Sort high-to-low by score. Ties are broken pessimistically: negatives rank
// before positives at equal score, so reported metrics are lower bounds and
// the calibration invariances hold exactly. Remaining ties order by
// (video_id, frame). Throws kDomain on non-finite scores.
std::vector<RankedFrame> rank_frames(std::vector<RankedFrame> frames);

// Prec(k) = TP(k) / k over the first k entries, 1 <= k <= size.
double precision_at_k(std::span<const RankedFrame> ranked, std::int64_t k);

// Non-interpolated average precision: the mean of Prec(k) over the positive
// positions k. positives must equal the number of positive entries.
double average_precision(std::span<const RankedFrame> ranked,
                         std::int64_t positives);

// Calibration weight expressed as the exact ratio negatives/positives.
// Keeping the integers lets the calibrated precision be computed as
// tp / (tp + fp*positives/negatives), which is invariant bit-for-bit under
// replication of the negative set.
struct RatioWeight {
  std::int64_t negatives = 0;
  std::int64_t positives = 0;
  double value() const {
    return static_cast<double>(negatives) / static_cast<double>(positives);
  }
};

// cPrec = w*TP / (w*TP + FP): precision with false positives down-weighted so
// positives and negatives carry equal total weight at w = N/P. w = 1 reduces
// to ordinary precision exactly. Throws kDomain for w <= 0.
double calibrated_precision(double tp, double fp, double w);
double calibrated_precision(double tp, double fp, RatioWeight w);

// cAP: mean over positive positions k of cPrec(k). With w = N/P the score of
// a random detector is 0.5 regardless of class prevalence.
double calibrated_average_precision(std::span<const RankedFrame> ranked,
                                    std::int64_t positives, double w);
double calibrated_average_precision(std::span<const RankedFrame> ranked,
                                    std::int64_t positives, RatioWeight w);

struct ClassEvalResult {
  int class_id = 0;
  // False when the class has no positive frame in the evaluated videos; such
  // results are reported but excluded from means.
  bool defined = false;
  std::int64_t positives = 0;
  std::int64_t negatives = 0;
  double w = 0.0;  // negatives/positives unless overridden
  double ap = 0.0;
  double cap = 0.0;
};

struct EvalReport {
  std::vector<ClassEvalResult> per_class;  // catalog order
  double map_value = 0.0;   // mean ap over defined classes
  double mcap_value = 0.0;  // mean cap over defined classes
  std::int64_t defined_classes = 0;
};

struct EvalOptions {
  // Which videos to pool; std::nullopt evaluates every annotated video.
  std::optional<Split> split = Split::kTest;
  int threads = 0;  // 0 = hardware concurrency
};

// Pool every frame of every evaluated video for one class, labeled by
// frame_labels. Frames inside instances of other classes count as negatives.
// Throws kReference when an evaluated video has no score track, kConsistency
// when a track's dimensions disagree with the annotations.
std::vector<RankedFrame> pool_frames(const Dataset& ds, const ScoreSet& scores,
                                     int class_id,
                                     const EvalOptions& options = {});

// Rank the pooled frames and compute ap plus cap with w = N/P.
ClassEvalResult evaluate_online(const Dataset& ds, const ScoreSet& scores,
                                int class_id, const EvalOptions& options = {});

// All classes in catalog order plus their means; class evaluations run in
// parallel, the report order is fixed.
EvalReport evaluate_online_all(const Dataset& ds, const ScoreSet& scores,
                               const EvalOptions& options = {});

// Unweighted means over the defined results, catalog order, pairwise
// summation. Throws kDomain when no result is defined.
EvalReport mean_over_classes(std::vector<ClassEvalResult> results);

struct DecileResult {
  // cap[d] evaluates the frames falling in the d-th tenth of their instance
  // against all frames outside every instance of the class; the class's
  // other positive frames are excluded entirely. Absent when no frame falls
  // in that decile.
  std::array<std::optional<double>, 10> cap;
  std::array<std::int64_t, 10> positives{};
  std::int64_t negatives = 0;
};

DecileResult evaluate_deciles(const Dataset& ds, const ScoreSet& scores,
                              int class_id, const EvalOptions& options = {});

// Predicate over instance metadata: one of the twelve boolean flags, or a
// quartile test such as length_q=2 / motion_q=4.
struct FlagSelector {
  enum class Kind { kBoolean, kLengthQuartile, kMotionQuartile };
  Kind kind = Kind::kBoolean;
  MetaFlag flag = MetaFlag::kAtypical;
  int quartile = 1;

  // Accepts the twelve flag keys plus "length_q=n" / "motion_q=n".
  static std::optional<FlagSelector> from_string(std::string_view text);
  std::string to_string() const;

  // yes / no / unannotated for one instance.
  std::optional<bool> value(const MetadataFlags& flags) const;
};

// What to do with the frames of the complementary subset (e.g. flag-false
// instances when evaluating the flag-true side): exclude them (default) or
// count them as negatives.
enum class ComplementPolicy { kExclude, kCountNegative };

struct MetadataSplitResult {
  bool eligible = false;
  std::int64_t yes_instances = 0;
  std::int64_t no_instances = 0;
  double cap_yes = 0.0;
  double cap_no = 0.0;
  double diff = 0.0;  // cap_yes - cap_no
};

// Compare cAP between instances with and without a flag. Eligible only when
// both subsets have at least min_instances annotated instances; unannotated
// instances belong to neither side. Each side is evaluated against all
// non-action frames with w recomputed from its own positive count.
MetadataSplitResult evaluate_metadata_split(
    const Dataset& ds, const ScoreSet& scores, int class_id,
    const FlagSelector& selector, int min_instances = 5,
    ComplementPolicy complement = ComplementPolicy::kExclude,
    const EvalOptions& options = {});

struct ClassifyResult {
  // Fraction of the class's instances whose argmax-by-mean score picks the
  // class; absent for classes without instances in the evaluated videos.
  std::vector<std::optional<double>> per_class_accuracy;  // catalog order
  double mean_accuracy = 0.0;
  std::int64_t instances_evaluated = 0;
};

// Segment classification over annotated instances only (background plays no
// part): predicted class = argmax over classes of the mean score across the
// instance's frames, ties to the lowest class id.
ClassifyResult classify_segments(const Dataset& ds, const ScoreSet& scores,
                                 const EvalOptions& options = {});

}  // namespace oad

#endif  // OAD_METRICS_HPP_
