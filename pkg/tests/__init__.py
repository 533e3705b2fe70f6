"""Test suite for Doctor Onboarding Service."""
