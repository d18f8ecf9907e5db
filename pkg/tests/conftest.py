import hypothesis

hypothesis.settings.register_profile(
    "artifact", max_examples=25, deadline=None, derandomize=True
)
hypothesis.settings.load_profile("artifact")
