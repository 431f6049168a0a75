# Generated by Django 5.2.1 on 2026-10-16 18:04

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='ResultadoCalculo',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('comando', models.CharField(help_text='Comando ejecutado', max_length=40)),
                ('entrada', models.TextField(blank=True, help_text='Ruta, literal JSON o referencia al catálogo')),
                ('opciones', models.JSONField(default=dict, help_text='Opciones del trabajo')),
                ('salida', models.TextField(blank=True, help_text='Salida estándar del comando')),
                ('codigo_salida', models.IntegerField(default=0, help_text='Código de salida del proceso')),
                ('created_at', models.DateTimeField(auto_now_add=True, help_text='Fecha de ejecución')),
            ],
            options={
                'verbose_name': 'Resultado de cálculo',
                'verbose_name_plural': 'Resultados de cálculo',
                'ordering': ['-created_at'],
            },
        ),
    ]
