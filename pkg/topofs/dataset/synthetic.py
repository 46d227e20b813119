import numpy as np

from .feature_matrix import FeatureMatrix


def make_latent_dataset(n_samples: int = 200,
                        n_informative: int = 10,
                        n_noise: int = 90,
                        noise_scale: float = 0.5,
                        seed: int = 0) -> FeatureMatrix:
    """
    Generate a labelled dataset whose class is decided by a hidden latent signal.

    The first ``n_informative`` features are noisy copies of the latent signal, the
    remaining ``n_noise`` features are independent standard normal noise. The label is
    1 when the latent signal is positive, 0 otherwise.
    """
    rng = np.random.default_rng(seed)
    latent = rng.standard_normal(n_samples)
    informative = latent[:, None] + noise_scale * rng.standard_normal((n_samples, n_informative))
    noise = rng.standard_normal((n_samples, n_noise))
    labels = (latent > 0).astype(np.int64)
    values = np.hstack([informative, noise])
    names = [f"informative_{i}" for i in range(n_informative)] + [f"noise_{i}" for i in range(n_noise)]
    return FeatureMatrix.from_array(values, labels=labels, feature_names=names)
