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

#ifndef OAD_OFFLINE_HPP_
#define OAD_OFFLINE_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oad/annotations.hpp"
#include "oad/metrics.hpp"
#include "oad/scores.hpp"

namespace oad {

// A scored temporal interval proposal, inclusive on both ends.
struct Detection {
  std::string video_id;
  int class_id = 0;
  std::int64_t start_frame = 0;
  std::int64_t end_frame = 0;
  double score = 0.0;

  std::int64_t length() const { return end_frame - start_frame + 1; }
};

// Intersection over union of two inclusive frame intervals; 0 when disjoint.
double iou(std::int64_t a_start, std::int64_t a_end, std::int64_t b_start,
           std::int64_t b_end);

// Median with the even case resolved as the mean of the two middle order
// statistics rounded half-up. Throws kDomain on an empty sequence.
std::int64_t median_duration(std::span<const std::int64_t> durations);

// One detection per frame: the window of window_len centered on t (the extra
// frame of an even window falls after t), clipped to the video, carrying that
// frame's score for the class.
std::vector<Detection> frames_to_detections(const ScoreTrack& track,
                                            int class_id,
                                            std::int64_t window_len);

// Greedy non-maximum suppression: repeatedly keep the highest-scoring
// remaining detection (ties: earlier start, then lower video_id, class,
// end) and drop the same-video same-class detections whose iou with it
// exceeds theta. Output in descending score order. Throws kDomain unless
// theta is within (0, 1].
std::vector<Detection> nms(std::vector<Detection> detections, double theta);

// Whether a detection must overlap strictly more than alpha (kStrict) or at
// least alpha (kInclusive) to count as a true positive.
enum class IouRule { kStrict, kInclusive };

struct MatchResult {
  std::vector<Detection> ordered;  // descending score, deterministic ties
  std::vector<std::uint8_t> is_tp;
};

// Greedy matching in descending score order: a detection is a true positive
// iff its iou with some not-yet-matched ground-truth instance of the same
// class in the same video passes alpha; that instance is then consumed, so
// duplicate detections of one instance count as false positives. Among the
// unmatched candidates the highest-iou instance is taken (ties: earlier
// start). Throws kDomain unless alpha is within (0, 1).
MatchResult match_detections(std::vector<Detection> detections,
                             std::span<const ActionInstance> ground_truth,
                             double alpha, IouRule rule = IouRule::kStrict);

// Non-interpolated detection AP over labels in score order with P = num_gt;
// missed ground truth lowers the score through the normalization. Throws
// kDomain when num_gt < 1.
double detection_ap(std::span<const std::uint8_t> labels_in_score_order,
                    std::int64_t num_gt);

struct WindowSource {
  enum class Kind { kMedian, kFixed };
  Kind kind = Kind::kMedian;
  std::int64_t fixed_len = 0;
};

struct OfflineOptions {
  std::vector<double> alphas{0.1, 0.2, 0.3, 0.4, 0.5};
  double nms_theta = 0.3;
  bool run_nms = true;  // applies to pre-built detection lists as well
  IouRule iou_rule = IouRule::kStrict;
  WindowSource window;
  std::optional<Split> split = Split::kTest;  // videos to evaluate
  // Where per-class median durations come from; classes with no instance in
  // this split fall back to their instances from any split.
  std::optional<Split> median_split = Split::kTrain;
  int threads = 0;
};

struct OfflineClassResult {
  int class_id = 0;
  bool defined = false;  // false when the class has no ground truth
  std::int64_t num_gt = 0;
  std::int64_t window_len = 0;          // 0 for pre-built detections
  std::vector<double> ap_per_alpha;
};

struct OfflineReport {
  std::vector<double> alphas;
  std::vector<OfflineClassResult> per_class;  // catalog order
  std::vector<double> map_per_alpha;          // mean over defined classes
  std::int64_t defined_classes = 0;
};

// Full reference pipeline from per-frame scores: window expansion -> NMS ->
// IoU matching -> detection AP, then the mean over classes for every alpha.
OfflineReport evaluate_offline(const Dataset& ds, const ScoreSet& scores,
                               const OfflineOptions& options = {});

// Same evaluation over an externally supplied detection list (e.g. window
// proposals of mixed lengths); window expansion is skipped.
OfflineReport evaluate_offline(const Dataset& ds,
                               std::span<const Detection> detections,
                               const OfflineOptions& options = {});

// Detection interchange CSV: header "video_id,class_name,start_frame,
// end_frame,score", scores as shortest round-trip decimals.
std::vector<Detection> read_detections_csv(std::istream& in,
                                           const ClassCatalog& catalog);
void write_detections_csv(std::span<const Detection> detections,
                          const ClassCatalog& catalog, std::ostream& out);

}  // namespace oad

#endif  // OAD_OFFLINE_HPP_
