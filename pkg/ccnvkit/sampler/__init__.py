from ccnvkit.sampler.sampler import RegionSampler, default_region
