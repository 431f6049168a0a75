# Generated by Django 5.2.1 on 2026-10-16 18:05

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='MultiComplejo',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('nombre', models.CharField(help_text="Nombre único del multicomplejo (ej: 'ejemplo_C')", max_length=80, unique=True)),
                ('vertices', models.JSONField(help_text='Lista de etiquetas de los vértices')),
                ('instancias', models.JSONField(default=list, help_text='Instancias de arista con identificador y multiconjunto')),
                ('orden', models.JSONField(default=list, help_text='Pares de cobertura del orden entre instancias')),
                ('descripcion', models.CharField(blank=True, help_text='Descripción del multicomplejo', max_length=250)),
                ('created_at', models.DateTimeField(auto_now_add=True, help_text='Fecha de creación automática al guardar')),
            ],
            options={
                'verbose_name': 'Multicomplejo',
                'verbose_name_plural': 'Multicomplejos',
                'ordering': ['nombre'],
            },
        ),
    ]
