# Test package for kindle-to-anki integration tests