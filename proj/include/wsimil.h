#ifndef WSIMIL_H
#define WSIMIL_H

/* C interface to the WSI classification pipeline. Every call returns a
 * wsimil_status; on failure wsimil_last_error() carries a message for the
 * calling thread. Strings passed in are borrowed for the duration of the
 * call. Paths name files produced by earlier stages (manifest.jsonl,
 * tiles.jsonl, .spzm checkpoints, prediction CSVs). */

#include <stdint.h>

#if defined(_WIN32)
#define WSIMIL_API __declspec(dllexport)
#else
#define WSIMIL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wsimil_status {
  WSIMIL_OK = 0,
  WSIMIL_E_INVALID_ARGUMENT = 1,
  WSIMIL_E_DIMENSION = 2,
  WSIMIL_E_CONTRACT = 3,
  WSIMIL_E_CONFIG = 4,
  WSIMIL_E_IO = 5,
  WSIMIL_E_FORMAT_MAGIC = 6,
  WSIMIL_E_FORMAT_VERSION = 7,
  WSIMIL_E_FORMAT_TRUNCATED = 8,
  WSIMIL_E_FORMAT_CHECKSUM = 9,
  WSIMIL_E_UNSUPPORTED = 10,
  WSIMIL_E_INTERNAL = 11
} wsimil_status;

WSIMIL_API const char* wsimil_version(void);
WSIMIL_API const char* wsimil_status_name(wsimil_status status);

/* Message from the most recent failing call on this thread; empty string
 * when the most recent call succeeded. The pointer stays valid until the
 * next API call on the same thread. */
WSIMIL_API const char* wsimil_last_error(void);

/* ------------------------------------------------------------------ */
/* Synthetic cohort                                                    */

typedef struct wsimil_synth_config {
  int32_t slides;
  double malignant_frac;
  int32_t width;
  int32_t height;
  int32_t paired_patients; /* patients contributing two slides each */
  uint64_t seed;
} wsimil_synth_config;

WSIMIL_API void wsimil_synth_config_init(wsimil_synth_config* cfg);

/* Writes slides/, annotations/ and manifest.jsonl under out_dir. */
WSIMIL_API wsimil_status wsimil_synth_cohort(const char* out_dir,
                                             const wsimil_synth_config* cfg);

/* ------------------------------------------------------------------ */
/* Tiling                                                              */

typedef struct wsimil_tile_config {
  int32_t patch;     /* tile edge in slide pixels */
  double overlap;    /* fraction of patch shared by neighbors */
  double min_tissue; /* tiles below this tissue fraction are dropped */
  int32_t threads;
} wsimil_tile_config;

typedef struct wsimil_tile_summary {
  int64_t kept;
  int64_t considered;
  int64_t slides;
} wsimil_tile_summary;

WSIMIL_API void wsimil_tile_config_init(wsimil_tile_config* cfg);

/* Writes out_dir/<slide_id>/<tile_id>.png for kept tiles plus
 * out_dir/tiles.jsonl. summary may be NULL. */
WSIMIL_API wsimil_status wsimil_tile_cohort(const char* manifest_path,
                                            const char* out_dir,
                                            const wsimil_tile_config* cfg,
                                            wsimil_tile_summary* summary);

/* ------------------------------------------------------------------ */
/* Training                                                            */

typedef struct wsimil_backbone_config {
  int32_t input_size;
  int32_t block_widths[8];
  int32_t blocks; /* number of entries used in block_widths */
  int32_t convs_per_block;
  int32_t frozen_blocks;
  int32_t attention_enabled;
  int32_t se_reduction;
  const char* head; /* "gap" | "gmp" | "mlp" */
  int32_t mlp_hidden;
} wsimil_backbone_config;

WSIMIL_API void wsimil_backbone_config_init(wsimil_backbone_config* cfg);

typedef struct wsimil_train_source_config {
  wsimil_backbone_config arch;
  int32_t epochs;
  double learning_rate;
  double momentum;
  int32_t batch_size;
  int32_t dropout; /* nonzero: rebalance with per-epoch instance dropout */
  int32_t fold;    /* validation fold, 0..3 */
  uint64_t seed;
  int32_t threads;
} wsimil_train_source_config;

typedef struct wsimil_train_target_config {
  const char* aggregation; /* "bgas" | "bgap" | "bgmp" */
  int32_t attention_dim;
  int32_t freeze_backbone;
  int32_t bag_cap;
  int32_t epochs;
  double learning_rate;
  double momentum;
  int32_t batch_size;
  int32_t fold;
  uint64_t seed;
  int32_t threads;
} wsimil_train_target_config;

typedef struct wsimil_train_result {
  int32_t best_epoch;
  double best_val_acc;
} wsimil_train_result;

WSIMIL_API void wsimil_train_source_config_init(
    wsimil_train_source_config* cfg);
WSIMIL_API void wsimil_train_target_config_init(
    wsimil_train_target_config* cfg);

/* split_path NULL or empty derives a patient split from the manifest and
 * seed and writes it to out_dir/split.json. Outputs: source.spzm (best
 * validation epoch), train_log.csv. result may be NULL. */
WSIMIL_API wsimil_status wsimil_train_source(
    const char* manifest_path, const char* tiles_index, const char* tiles_dir,
    const char* split_path, const char* out_dir,
    const wsimil_train_source_config* cfg, wsimil_train_result* result);

/* Bags each slide from tiles the source checkpoint predicts as tumor, then
 * trains the MIL stage. Outputs: target.spzm, train_log.csv. */
WSIMIL_API wsimil_status wsimil_train_target(
    const char* source_checkpoint, const char* manifest_path,
    const char* tiles_index, const char* tiles_dir, const char* split_path,
    const char* out_dir, const wsimil_train_target_config* cfg,
    wsimil_train_result* result);

/* ------------------------------------------------------------------ */
/* Models                                                              */

typedef struct wsimil_source_model wsimil_source_model;
typedef struct wsimil_target_model wsimil_target_model;

WSIMIL_API wsimil_status wsimil_source_model_open(const char* checkpoint_path,
                                                  wsimil_source_model** out);
WSIMIL_API void wsimil_source_model_close(wsimil_source_model* model);
WSIMIL_API wsimil_status wsimil_source_model_input_size(
    const wsimil_source_model* model, int32_t* out);

/* rgb: interleaved 8-bit RGB rows, width*height*3 bytes. Any size; the
 * patch is resampled to the network input. */
WSIMIL_API wsimil_status wsimil_source_score_patch(
    const wsimil_source_model* model, const uint8_t* rgb, int32_t width,
    int32_t height, double* tumor_probability);

WSIMIL_API wsimil_status wsimil_target_model_open(const char* checkpoint_path,
                                                  wsimil_target_model** out);
WSIMIL_API void wsimil_target_model_close(wsimil_target_model* model);

/* patches: n interleaved RGB buffers sharing one size. attention may be
 * NULL; when given it receives n weights and requires BGAS aggregation. */
WSIMIL_API wsimil_status wsimil_target_score_bag(
    const wsimil_target_model* model, const uint8_t* const* patches,
    int32_t n, int32_t width, int32_t height, int32_t threads,
    double* bag_probability, double* attention);

/* ------------------------------------------------------------------ */
/* Inference over artifacts                                            */

/* Per-tile tumor probabilities for every index entry. CSV columns:
 * tile_id,slide_id,probability,label (label empty on unlabeled tiles). */
WSIMIL_API wsimil_status wsimil_infer_roi(const wsimil_source_model* model,
                                          const char* tiles_index,
                                          const char* tiles_dir,
                                          const char* out_csv,
                                          int32_t threads);

/* Per-slide bag predictions: slide_id,probability,label. attention_csv may
 * be NULL; when given it receives slide_id,tile_id,attention rows of raw
 * attention weights (BGAS targets only). */
WSIMIL_API wsimil_status wsimil_infer_wsi(
    const wsimil_source_model* source, const wsimil_target_model* target,
    const char* manifest_path, const char* tiles_index, const char* tiles_dir,
    const char* out_csv, const char* attention_csv, int32_t bag_cap,
    uint64_t seed, int32_t threads);

/* ------------------------------------------------------------------ */
/* Evaluation                                                          */

/* Each CSV needs "probability" and "label" columns; empty labels are
 * skipped. One file yields a flat metric report; several are treated as
 * folds and the JSON carries folds[], mean, std and a pooled report. */
WSIMIL_API wsimil_status wsimil_eval(const char* const* pred_csvs,
                                     int32_t n_csvs, double threshold,
                                     const char* out_json);

/* ------------------------------------------------------------------ */
/* Heatmaps                                                            */

/* Bilinear probability heatmap for one slide. out_csv may be NULL.
 * max_side caps the longest output edge (aspect preserved). */
WSIMIL_API wsimil_status wsimil_heatmap_roi(
    const char* manifest_path, const char* pred_csv, const char* tiles_index,
    const char* slide_id, const char* out_png, const char* out_csv,
    int32_t max_side);

/* Attention heatmap: weights min-max normalized per bag, pixels outside the
 * bag tiles rendered as 0. */
WSIMIL_API wsimil_status wsimil_heatmap_attention(
    const char* manifest_path, const char* attention_csv,
    const char* tiles_index, const char* slide_id, const char* out_png,
    const char* out_csv, int32_t max_side);

/* Class activation map for one patch raster. class_name is "tumor" or
 * "non_tumor"; out_size 0 uses the patch's own size; out_csv may be NULL
 * and keeps the native feature-grid values. */
WSIMIL_API wsimil_status wsimil_heatmap_cam(const wsimil_source_model* model,
                                            const char* patch_png,
                                            const char* class_name,
                                            int32_t out_size,
                                            const char* out_png,
                                            const char* out_csv);

#ifdef __cplusplus
}
#endif

#endif /* WSIMIL_H */
