from ccnvkit.examples.example_one import ExampleISpec, build_example_I, build_example_I_separable
from ccnvkit.examples.example_two import ExampleIISpec, build_example_II, build_example_II_analytic
