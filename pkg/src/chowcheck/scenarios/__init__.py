# Bundled scenario files live next to this marker as package data.
