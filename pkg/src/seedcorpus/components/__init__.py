"""Module contains variable definitions shared across components."""

# corpus
max_ngram_order = 8
ne_mask_prefix = '__NE'
manifest_languages = 'languages'
manifest_ids = 'ids'
manifest_metadata = 'metadata'
manifest_lexicon = 'lexicon'

metadata_columns = (
    'code',
    'name',
    'family',
    'speakers',
    'resource_level',
    'neighbors',
    )
min_resource_level = 0
max_resource_level = 5

# Named budget spans. Ids either follow the "LUK 1:1" convention or the
# eight-digit BBCCCVVV convention where book 42 is Luke.
span_luke = 'luke'
named_spans = {
    span_luke: ('LUK ', '42'),
    }
span_range_sep = '..'

# selection methods
method_luke = 'luke'
method_rand = 'rand'
method_s = 's'
method_sn = 'sn'
method_sng = 'sng'
method_entn = 'entN'
method_entk = 'entK'
method_aggl = 'aggL'
method_aggf = 'aggF'
method_aggp = 'aggP'
method_aggn = 'aggN'
sng_orders = (2, 3, 4, 5)

ngram_methods = (method_s, method_sn, method_sng)
entropy_methods = (method_entn, method_entk)
aggregation_methods = (method_aggl, method_aggf, method_aggp, method_aggn)
baseline_methods = (method_luke, method_rand)

# the fourteen selection methods
method_names = (
    method_luke,
    method_rand,
    method_s,
    method_sn,
    *(f'{method_sng}{j}' for j in sng_orders),
    method_entn,
    method_entk,
    *aggregation_methods,
    )

default_sng_order = 4
default_agg_order = 5

# aggregation pools
policy_language = 'per_language'
policy_family = 'per_family'
policy_person = 'per_person'
policy_neighbor = 'per_neighbor'
pool_policies = (
    policy_language,
    policy_family,
    policy_person,
    policy_neighbor,
    )
agg_method_policy = {
    method_aggl: policy_language,
    method_aggf: policy_family,
    method_aggp: policy_person,
    method_aggn: policy_neighbor,
    }
default_pool_k = 10

# entropy scorer
smoothing_mle = 'mle'
smoothing_laplace = 'laplace'
smoothing_absdiscount = 'absdiscount'
smoothings = (smoothing_mle, smoothing_laplace, smoothing_absdiscount)
default_discount = 0.75
warm_start_lines = 5
bos_token = '<s>'
unk_token = '<unk>'

# (smoothing, order of the chosen-set model, order of the halves)
entropy_settings = {
    method_entn: (smoothing_laplace, 2, 2),
    method_entk: (smoothing_absdiscount, 5, 2),
    }

# evaluation
chrf_order = 6
chrf_beta = 2
bleu_order = 4
bleu_smooth_method = 'add-k'
bleu_smooth_value = 1
combine_centeredness = 'centeredness'

# train / valid / test percentages
pretrain_split = (80.0, 10.0, 10.0)
train_split = (3.0, 0.2, 96.8)

# inert hyperparameters for downstream trainers
default_hyperparameters = {
    'encoder_layers': 12,
    'decoder_layers': 12,
    'hidden_size': 1024,
    'attention_heads': 16,
    'word_vec_size': 1024,
    'transformer_ff': 4096,
    'label_smoothing': 0.2,
    'learning_rate': 0.0002,
    'finetune_learning_rate': 0.00005,
    'dropout': 0.1,
    'attention_dropout': 0.1,
    'optim': 'adam',
    'decay_method': 'noam',
    'bpe_size_target': 3000,
    'bpe_size_combined': 9000,
    }

rng_name = 'numpy.random.Philox'
default_seed = 0
progress_every = 100

SEEDCORPUS_TITLE = (
    "\n"
    " ___  ___  ___  ___    ___  ___  ___  ___  _ _  ___ \n"
    "/ __>| __>| __>| . \\  |  _>| . || . \\| . \\| | |/ __>\n"
    "\\__ \\| _> | _> | | |  | <__| | ||   /|  _/| ' |\\__ \\\n"
    "<___/|___>|___>|___/  `___/`___'|_\\_\\|_|  `___'<___/\n"
    "===================================================="
    )
