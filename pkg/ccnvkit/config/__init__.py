from ccnvkit.config.configurator import Config
