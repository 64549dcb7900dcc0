"""Test suite for seedcorpus."""
